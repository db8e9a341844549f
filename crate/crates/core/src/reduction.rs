//! Bounded Pareto sum through bounded monotone min-plus convolution.
//!
//! After translating each set so its smallest x-coordinate is 0, the array
//! `A[x] = min { p.y : p ∈ P, p.x ≤ x }` is non-increasing, and the Pareto sum
//! consists of the positions where `C = A ⊕ B` strictly drops (plus `k = 0`).
//! Arrays have length `W_max + 1`; the convolution has length `2·W_max + 1`.

use crate::error::{Error, Result};
use crate::minplus::{
    cdxz_minplus, convex_pruning_minplus, enhanced_minplus, naive_minplus, CdxzConfig, ConvResult,
    MonotoneArray, DEFAULT_BASE_THRESHOLD,
};
use crate::pareto::{ParetoSet, Point, WitnessedPoint};

/// Default cap on the array length `W_max + 1`.
pub const DEFAULT_ARRAY_BUDGET: u64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionContext {
    pub offset_p: i64,
    pub offset_q: i64,
    pub array_len: usize,
    pub default_fill: i64,
    /// Translated x-coordinates, used to map array indices back to points.
    xs_p: Vec<usize>,
    xs_q: Vec<usize>,
}

impl ReductionContext {
    /// Index of the point of `P` whose value `A[x]` carries.
    pub fn owner_p(&self, x: usize) -> usize {
        self.xs_p.partition_point(|&px| px <= x) - 1
    }

    pub fn owner_q(&self, x: usize) -> usize {
        self.xs_q.partition_point(|&qx| qx <= x) - 1
    }
}

pub fn pareto_to_conv(
    p: &ParetoSet,
    q: &ParetoSet,
) -> Result<(MonotoneArray, MonotoneArray, ReductionContext)> {
    pareto_to_conv_with_budget(p, q, DEFAULT_ARRAY_BUDGET)
}

pub fn pareto_to_conv_with_budget(
    p: &ParetoSet,
    q: &ParetoSet,
    budget: u64,
) -> Result<(MonotoneArray, MonotoneArray, ReductionContext)> {
    for pt in p.iter().chain(q.iter()) {
        if pt.y < 0 {
            return Err(Error::NegativeCoordinate { value: pt.y });
        }
    }
    let (offset_p, offset_q) = (p.first().x, q.first().x);
    let w_max = (p.last().x - offset_p).max(q.last().x - offset_q) as u64;
    if w_max + 1 > budget {
        return Err(Error::BudgetExceeded {
            what: "convolution array",
            requested: w_max + 1,
            budget,
            hint: "; use sort & compare or bucket sort for sparse inputs",
        });
    }
    let array_len = w_max as usize + 1;
    let default_fill = p.first().y.max(q.first().y);
    let build = |set: &ParetoSet, off: i64| {
        let mut arr = vec![default_fill; array_len];
        for pt in set {
            arr[(pt.x - off) as usize] = pt.y;
        }
        for i in 1..array_len {
            if arr[i - 1] < arr[i] {
                arr[i] = arr[i - 1];
            }
        }
        arr
    };
    let a = MonotoneArray::new(build(p, offset_p))?;
    let b = MonotoneArray::new(build(q, offset_q))?;
    let ctx = ReductionContext {
        offset_p,
        offset_q,
        array_len,
        default_fill,
        xs_p: p.iter().map(|pt| (pt.x - offset_p) as usize).collect(),
        xs_q: q.iter().map(|pt| (pt.x - offset_q) as usize).collect(),
    };
    Ok((a, b, ctx))
}

/// Strict-decrease positions of `C`, shifted back to original coordinates.
/// Witness indices are translated to point indices of `P` and `Q`.
pub fn conv_to_pareto(c: &ConvResult, ctx: &ReductionContext) -> Vec<WitnessedPoint> {
    let shift = ctx.offset_p + ctx.offset_q;
    let mut out = Vec::new();
    for (k, &v) in c.values.iter().enumerate() {
        if k > 0 && v >= c.values[k - 1] {
            continue;
        }
        let point = Point::new(k as i64 + shift, v);
        out.push(match &c.witnesses {
            Some(w) => WitnessedPoint::witnessed(point, ctx.owner_p(w[k]), ctx.owner_q(k - w[k])),
            None => WitnessedPoint::bare(point),
        });
    }
    out
}

/// Convolution backend used by [`bounded_pareto_sum`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    Naive,
    #[default]
    Enhanced,
    ConvexPruning {
        base_threshold: usize,
    },
    Cdxz(CdxzConfig),
}

impl Backend {
    pub fn convex_pruning() -> Self {
        Backend::ConvexPruning {
            base_threshold: DEFAULT_BASE_THRESHOLD,
        }
    }

    pub fn reports_witnesses(&self) -> bool {
        !matches!(self, Backend::Cdxz(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundedSum {
    pub points: Vec<WitnessedPoint>,
    /// Share of index pairs discarded by convex pruning.
    pub pruned_fraction: Option<f64>,
}

pub fn bounded_pareto_sum(p: &ParetoSet, q: &ParetoSet, backend: &Backend) -> Result<BoundedSum> {
    bounded_pareto_sum_with_budget(p, q, backend, DEFAULT_ARRAY_BUDGET)
}

pub fn bounded_pareto_sum_with_budget(
    p: &ParetoSet,
    q: &ParetoSet,
    backend: &Backend,
    budget: u64,
) -> Result<BoundedSum> {
    let (a, b, ctx) = pareto_to_conv_with_budget(p, q, budget)?;
    let (a, b) = (a.values(), b.values());
    let mut pruned_fraction = None;
    let c = match backend {
        Backend::Naive => naive_minplus(a, b, true),
        Backend::Enhanced => enhanced_minplus(a, b, true)?,
        Backend::ConvexPruning { base_threshold } => {
            let (c, stats) = convex_pruning_minplus(a, b, true, *base_threshold);
            pruned_fraction = Some(stats.pruned_fraction());
            c
        }
        Backend::Cdxz(cfg) => cdxz_minplus(a, b, cfg)?,
    };
    Ok(BoundedSum {
        points: conv_to_pareto(&c, &ctx),
        pruned_fraction,
    })
}
