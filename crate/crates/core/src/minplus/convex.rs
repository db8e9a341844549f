//! Convex minorants and linear-time convex convolution.
//!
//! The min-plus convolution of two convex sequences is obtained by merging
//! their (non-decreasing) slope sequences. The merge order gives a witness
//! path that is monotone in `k`. [`HullApproxConvolution`] packages the lower
//! hull approximations of two arbitrary arrays together with that path and
//! the slack `Γ`, which is what the convex-pruning backend queries.

use std::cmp::Ordering;

use super::rational::{sum_cmp_zero, Rational};
use super::{conv_len, ConvResult};
use crate::error::{Error, Result};

/// Lower convex hull of `{(i, A[i])}` with exact linear interpolation.
#[derive(Clone, Debug)]
pub struct ConvexApprox {
    values: Vec<i64>,
    hull: Vec<usize>,
    /// `segment[i] = s` with `hull[s] <= i < hull[s + 1]`; the last index
    /// belongs to the last segment.
    segment: Vec<u32>,
    gamma: Rational,
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Lower hull by a monotone-chain scan. Collinear interior points are not
/// hull vertices, so a linear input keeps only its endpoints.
pub fn lower_hull_approx(a: &[i64]) -> ConvexApprox {
    assert!(!a.is_empty(), "hull of an empty array");
    let pt = |i: usize| (i as i128, a[i] as i128);
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..a.len() {
        while hull.len() >= 2
            && cross(pt(hull[hull.len() - 2]), pt(hull[hull.len() - 1]), pt(i)) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    let mut segment = vec![0u32; a.len()];
    let mut s = 0usize;
    for (i, seg) in segment.iter_mut().enumerate() {
        while s + 2 < hull.len() && hull[s + 1] <= i {
            s += 1;
        }
        *seg = s as u32;
    }
    let mut approx = ConvexApprox {
        values: a.to_vec(),
        hull,
        segment,
        gamma: Rational::ZERO,
    };
    approx.gamma = (0..a.len())
        .map(|i| Rational::from_int(a[i]) - approx.value_at(i))
        .max()
        .unwrap_or(Rational::ZERO);
    approx
}

impl ConvexApprox {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn hull_vertices(&self) -> &[usize] {
        &self.hull
    }

    /// `Γ_A = max_i A[i] - A'[i]`.
    pub fn gamma(&self) -> Rational {
        self.gamma
    }

    fn seg_bounds(&self, i: usize) -> (usize, usize) {
        let s = self.segment[i] as usize;
        (self.hull[s], self.hull[s + 1])
    }

    /// Value of the convex minorant at `i`.
    pub fn value_at(&self, i: usize) -> Rational {
        if self.hull.len() == 1 {
            return Rational::from_int(self.values[0]);
        }
        let (v1, v2) = self.seg_bounds(i);
        if i == v1 || i == v2 {
            return Rational::from_int(self.values[i]);
        }
        let num =
            self.values[v1] as i128 * (v2 - i) as i128 + self.values[v2] as i128 * (i - v1) as i128;
        Rational::new(num, (v2 - v1) as i128)
    }

    /// Slope of the step `i -> i + 1` as `(dy, dx)` with `dx > 0`.
    fn slope(&self, i: usize) -> (i128, i128) {
        let (v1, v2) = self.seg_bounds(i);
        (
            self.values[v2] as i128 - self.values[v1] as i128,
            (v2 - v1) as i128,
        )
    }
}

fn cmp_slopes(a: (i128, i128), b: (i128, i128)) -> Ordering {
    (a.0 * b.1).cmp(&(b.0 * a.1))
}

/// Merge of two non-decreasing slope sequences. `path[k]` is the number of
/// steps taken in the first sequence after `k` total steps; ties step in the
/// first sequence.
fn merge_path(n: usize, m: usize, a_le_b: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let len = conv_len(n, m);
    let mut path = Vec::with_capacity(len);
    let (mut i, mut j) = (0usize, 0usize);
    path.push(0);
    for _ in 1..len {
        if i + 1 < n && (j + 1 == m || a_le_b(i, j)) {
            i += 1;
        } else {
            j += 1;
        }
        path.push(i);
    }
    path
}

fn check_convex(v: &[i64]) -> Result<()> {
    match v
        .windows(3)
        .position(|w| (w[1] as i128 - w[0] as i128) > (w[2] as i128 - w[1] as i128))
    {
        Some(i) => Err(Error::ConvexityViolated { index: i + 1 }),
        None => Ok(()),
    }
}

/// Convolution of convex integer sequences by slope merging. The witnesses
/// form a monotone non-decreasing path.
pub fn convex_minplus(a: &[i64], b: &[i64]) -> Result<ConvResult> {
    check_convex(a)?;
    check_convex(b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(ConvResult {
            values: vec![],
            witnesses: Some(vec![]),
        });
    }
    let path = merge_path(a.len(), b.len(), |i, j| a[i + 1] - a[i] <= b[j + 1] - b[j]);
    let values = path
        .iter()
        .enumerate()
        .map(|(k, &i)| a[i] + b[k - i])
        .collect();
    Ok(ConvResult {
        values,
        witnesses: Some(path),
    })
}

/// Hull approximations of `A` and `B`, their convex convolution `C'` and
/// `Γ = max(1, Γ_A, Γ_B)`.
#[derive(Clone, Debug)]
pub struct HullApproxConvolution {
    pub a: ConvexApprox,
    pub b: ConvexApprox,
    /// Witness path of `C'`.
    pub path: Vec<usize>,
    pub gamma: Rational,
}

impl HullApproxConvolution {
    pub fn new(a: &[i64], b: &[i64]) -> Self {
        let ha = lower_hull_approx(a);
        let hb = lower_hull_approx(b);
        let path = merge_path(a.len(), b.len(), |i, j| {
            cmp_slopes(ha.slope(i), hb.slope(j)) != Ordering::Greater
        });
        let gamma = Rational::ONE.max(ha.gamma()).max(hb.gamma());
        HullApproxConvolution {
            a: ha,
            b: hb,
            path,
            gamma,
        }
    }

    /// `C'[k]`.
    pub fn approx_value(&self, k: usize) -> Rational {
        let w = self.path[k];
        self.a.value_at(w) + self.b.value_at(k - w)
    }

    /// `A'[i] + B'[j] <= C'[i + j] + 2Γ`, evaluated exactly.
    pub fn in_region(&self, i: usize, j: usize) -> bool {
        let k = i + j;
        let w = self.path[k];
        let terms = [
            self.a.value_at(i),
            self.b.value_at(j),
            -self.a.value_at(w),
            -self.b.value_at(k - w),
            -self.gamma,
            -self.gamma,
        ];
        sum_cmp_zero(&terms) != Ordering::Greater
    }

    /// Whether `(i, j)` lies strictly on the small-`i` side of the path.
    pub fn above_path(&self, i: usize, j: usize) -> bool {
        i < self.path[i + j]
    }

    pub fn below_path(&self, i: usize, j: usize) -> bool {
        i > self.path[i + j]
    }
}

/// Membership of `(i, j)` in the relevant region `R_2Γ`.
pub fn in_relevant_region(i: usize, j: usize, conv: &HullApproxConvolution) -> bool {
    conv.in_region(i, j)
}
