//! Seeded instance generators for the three benchmark families.
//!
//! All randomness comes from a xoshiro256++ generator seeded through
//! SplitMix64 (`seed_from_u64`), so a `(spec, seed)` pair reproduces the same
//! instance on every platform.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::pareto::{ParetoSet, Point};

pub type GenRng = Xoshiro256PlusPlus;

pub fn rng_from_seed(seed: u64) -> GenRng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// Two random strictly monotone sequences in `[0, W]`.
    Range,
    /// Samples of `W - x`, partially perturbed.
    NearLinear,
    /// Samples of `c / x`, partially perturbed.
    NearCurved,
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Range => "range",
            GenKind::NearLinear => "near-linear",
            GenKind::NearCurved => "near-curved",
        }
    }
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "range" => Ok(GenKind::Range),
            "near-linear" | "near_linear" => Ok(GenKind::NearLinear),
            "near-curved" | "near_curved" => Ok(GenKind::NearCurved),
            other => Err(Error::Config(format!("unknown instance kind `{other}`"))),
        }
    }
}

pub const DEFAULT_PERTURB_FRACTION: f64 = 0.1;

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Points per set.
    pub n: usize,
    /// Coordinate range `[0, W]`.
    pub w: u64,
    /// `c` in `f(x) = c / x`; `None` means `2 * W^2`, which maps the arc
    /// over `x ∈ [W, 2W]` onto `[0, W]` in both coordinates.
    pub curve_constant: Option<u64>,
    pub perturb_fraction: f64,
    pub seed: u64,
}

impl GenSpec {
    /// Spec with `W = range_factor * n`.
    pub fn with_range_factor(kind: GenKind, n: usize, range_factor: u64, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            w: range_factor * n as u64,
            curve_constant: None,
            perturb_fraction: DEFAULT_PERTURB_FRACTION,
            seed,
        }
    }

    fn check(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.perturb_fraction) {
            return Err(Error::Config(format!(
                "perturb fraction {} outside [0, 1]",
                self.perturb_fraction
            )));
        }
        if self.n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(())
    }
}

/// `n` distinct strictly increasing values in `[0, w]`.
pub fn gen_monotone_sequence(n: usize, w: u64, seed: u64) -> Result<Vec<u64>> {
    monotone_sequence(n, w, &mut rng_from_seed(seed))
}

/// Counter construction: `n` random increments over `W + 1` counters, then a
/// circular sweep pushes every surplus to the next counter until all
/// counters are 0 or 1. Runs in `O(n + W)`.
pub fn monotone_sequence<R: Rng>(n: usize, w: u64, rng: &mut R) -> Result<Vec<u64>> {
    if (n as u64) > w.saturating_add(1) {
        return Err(Error::RangeTooSmall { n, w });
    }
    let slots = usize::try_from(w + 1)
        .map_err(|_| Error::Config(format!("range {w} does not fit in memory")))?;
    let mut counters = vec![0u32; slots];
    for _ in 0..n {
        counters[rng.gen_range(0..slots)] += 1;
    }
    // Two laps always suffice: after the first lap only the carry wrapped into
    // counter 0 remains, and there is room for it.
    let mut i = 0usize;
    let mut untouched = 0usize;
    while untouched < slots {
        if counters[i] > 1 {
            let carry = counters[i] - 1;
            counters[i] = 1;
            let next = if i + 1 == slots { 0 } else { i + 1 };
            counters[next] += carry;
            untouched = 0;
        } else {
            untouched += 1;
        }
        i = if i + 1 == slots { 0 } else { i + 1 };
    }
    Ok(counters
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 1)
        .map(|(i, _)| i as u64)
        .collect())
}

fn range_set<R: Rng>(n: usize, w: u64, rng: &mut R) -> Result<ParetoSet> {
    let xs = monotone_sequence(n, w, rng)?;
    let ys = monotone_sequence(n, w, rng)?;
    let points = xs
        .iter()
        .zip(ys.iter().rev())
        .map(|(&x, &y)| Point::new(x as i64, y as i64))
        .collect();
    ParetoSet::new(points)
}

pub fn gen_range_instance(spec: &GenSpec) -> Result<(ParetoSet, ParetoSet)> {
    if spec.kind != GenKind::Range {
        return Err(Error::Config(format!(
            "range generator called with kind {}",
            spec.kind.name()
        )));
    }
    spec.check()?;
    let mut rng = rng_from_seed(spec.seed);
    let p = range_set(spec.n, spec.w, &mut rng)?;
    let q = range_set(spec.n, spec.w, &mut rng)?;
    Ok((p, q))
}

/// `(x, W - x)` for each sampled x.
pub fn linear_points(xs: &[u64], w: u64) -> Vec<Point> {
    xs.iter()
        .map(|&x| Point::new(x as i64, w as i64 - x as i64))
        .collect()
}

/// `(x, round(c / x))` for sorted distinct `x >= 1`, with ties in y pushed up
/// from the right end so y stays strictly decreasing.
pub fn curved_points(xs: &[u64], c: u64) -> Vec<Point> {
    let mut ys: Vec<i64> = xs
        .iter()
        .map(|&x| {
            let (c, x) = (c as u128, x as u128);
            ((2 * c + x) / (2 * x)) as i64
        })
        .collect();
    for i in (0..ys.len().saturating_sub(1)).rev() {
        ys[i] = ys[i].max(ys[i + 1] + 1);
    }
    xs.iter()
        .zip(ys)
        .map(|(&x, y)| Point::new(x as i64, y))
        .collect()
}

/// Moves the y of a random `fraction` of points to a uniform value strictly
/// between its neighbours' y values. End points can only move inward.
pub fn perturb<R: Rng>(points: &mut [Point], fraction: f64, rng: &mut R) {
    let n = points.len();
    if n < 2 {
        return;
    }
    let count = ((fraction * n as f64).round() as usize).min(n);
    let mut chosen = index::sample(rng, n, count).into_vec();
    chosen.sort_unstable();
    for i in chosen {
        let hi = if i == 0 {
            points[0].y
        } else {
            points[i - 1].y - 1
        };
        let lo = if i + 1 == n {
            points[n - 1].y
        } else {
            points[i + 1].y + 1
        };
        if lo < hi {
            points[i].y = rng.gen_range(lo..=hi);
        }
    }
}

fn function_set<R: Rng>(spec: &GenSpec, rng: &mut R) -> Result<ParetoSet> {
    let mut points = match spec.kind {
        GenKind::NearLinear => {
            let xs = monotone_sequence(spec.n, spec.w, rng)?;
            linear_points(&xs, spec.w)
        }
        GenKind::NearCurved => {
            if spec.w == 0 {
                return Err(Error::RangeTooSmall { n: spec.n, w: 0 });
            }
            // Arc of c / x over x in [W, 2W], shifted into [0, W]^2.
            let w = spec.w;
            let c = match spec.curve_constant {
                Some(c) => c.max(1),
                None => w
                    .checked_mul(w)
                    .and_then(|v| v.checked_mul(2))
                    .ok_or_else(|| {
                        Error::Config(format!("default curve constant 2W^2 overflows for W = {w}"))
                    })?,
            };
            let xs: Vec<u64> = monotone_sequence(spec.n, w, rng)?
                .into_iter()
                .map(|u| u + w)
                .collect();
            let floor = ((c as u128 + w as u128) / (2 * w as u128)) as i64;
            curved_points(&xs, c)
                .into_iter()
                .map(|p| Point::new(p.x - w as i64, p.y - floor))
                .collect()
        }
        GenKind::Range => unreachable!("handled by gen_range_instance"),
    };
    perturb(&mut points, spec.perturb_fraction, rng);
    ParetoSet::new(points)
}

pub fn gen_function_instance(spec: &GenSpec) -> Result<(ParetoSet, ParetoSet)> {
    if spec.kind == GenKind::Range {
        return Err(Error::Config(
            "function generator called with kind range".into(),
        ));
    }
    spec.check()?;
    let mut rng = rng_from_seed(spec.seed);
    let p = function_set(spec, &mut rng)?;
    let q = function_set(spec, &mut rng)?;
    Ok((p, q))
}

/// Dispatches on `spec.kind`.
pub fn generate(spec: &GenSpec) -> Result<(ParetoSet, ParetoSet)> {
    match spec.kind {
        GenKind::Range => gen_range_instance(spec),
        _ => gen_function_instance(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::validate_pareto_set;

    #[test]
    fn full_range_is_forced() {
        for seed in 0..5 {
            assert_eq!(
                gen_monotone_sequence(11, 10, seed).unwrap(),
                (0..=10).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn single_value() {
        for seed in 0..20 {
            let s = gen_monotone_sequence(1, 37, seed).unwrap();
            assert_eq!(s.len(), 1);
            assert!(s[0] <= 37);
        }
    }

    #[test]
    fn sequence_is_deterministic() {
        let a = gen_monotone_sequence(5, 10, 42).unwrap();
        assert_eq!(a, gen_monotone_sequence(5, 10, 42).unwrap());
        assert_eq!(a, vec![1, 2, 3, 6, 7]);
    }

    #[test]
    fn range_too_small() {
        assert!(matches!(
            gen_monotone_sequence(12, 10, 0),
            Err(Error::RangeTooSmall { n: 12, w: 10 })
        ));
    }

    #[test]
    fn sequence_invariants() {
        for seed in 0..200 {
            let n = (seed % 40) as usize + 1;
            let w = n as u64 - 1 + seed % 17;
            let s = gen_monotone_sequence(n, w, seed).unwrap();
            assert_eq!(s.len(), n);
            assert!(s.windows(2).all(|p| p[0] < p[1]));
            assert!(s.iter().all(|&v| v <= w));
        }
    }

    #[test]
    fn tiny_range_instance() {
        for seed in 0..10 {
            let spec = GenSpec {
                kind: GenKind::Range,
                n: 2,
                w: 1,
                curve_constant: None,
                perturb_fraction: 0.0,
                seed,
            };
            let (p, q) = gen_range_instance(&spec).unwrap();
            assert_eq!(p.points(), &[Point::new(0, 1), Point::new(1, 0)]);
            assert_eq!(q.points(), &[Point::new(0, 1), Point::new(1, 0)]);
        }
    }

    #[test]
    fn unperturbed_linear() {
        let n = 6u64;
        let xs: Vec<u64> = (0..n).collect();
        let pts = linear_points(&xs, n);
        let expected: Vec<Point> = (0..n as i64).map(|i| Point::new(i, n as i64 - i)).collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn curved_evaluation() {
        let pts = curved_points(&[1, 2, 3, 4], 12);
        let ys: Vec<i64> = pts.iter().map(|p| p.y).collect();
        assert_eq!(ys, vec![12, 6, 4, 3]);
        // round(5/3) = 2, round(5/4) = 1, round(5/5) = 1 -> repaired upward
        let pts = curved_points(&[3, 4, 5], 5);
        assert!(validate_pareto_set(&pts));
        assert_eq!(pts.last().unwrap().y, 1);
    }

    #[test]
    fn generated_sets_are_pareto_and_deterministic() {
        for kind in [GenKind::Range, GenKind::NearLinear, GenKind::NearCurved] {
            for seed in 0..30 {
                let mut spec = GenSpec::with_range_factor(kind, 1 + seed as usize * 3, 2, seed);
                spec.perturb_fraction = 0.5;
                let (p, q) = generate(&spec).unwrap();
                assert_eq!(p.len(), spec.n);
                assert_eq!(q.len(), spec.n);
                assert!(validate_pareto_set(p.points()));
                assert!(p.iter().chain(q.iter()).all(|pt| pt.x >= 0 && pt.y >= 0));
                assert_eq!(generate(&spec).unwrap(), (p, q));
            }
        }
    }

    #[test]
    fn near_curved_fills_the_box() {
        let spec = GenSpec {
            perturb_fraction: 0.0,
            ..GenSpec::with_range_factor(GenKind::NearCurved, 500, 2, 3)
        };
        let (p, _) = generate(&spec).unwrap();
        let w = spec.w as i64;
        assert!(p
            .iter()
            .all(|pt| (0..=w).contains(&pt.x) && (0..=w + 2).contains(&pt.y)));
        // Strictly convex arc: slopes flatten from about -2 to about -1/2.
        assert!(p.first().y >= w - 10 && p.last().y <= 10);
    }

    #[test]
    fn perturbation_keeps_order() {
        let mut rng = rng_from_seed(9);
        let xs: Vec<u64> = (0..200).map(|i| i * 3).collect();
        let mut pts = linear_points(&xs, 1000);
        perturb(&mut pts, 1.0, &mut rng);
        assert!(validate_pareto_set(&pts));
    }

    #[test]
    fn bad_fraction_rejected() {
        let mut spec = GenSpec::with_range_factor(GenKind::NearLinear, 10, 2, 0);
        spec.perturb_fraction = 1.5;
        assert!(generate(&spec).is_err());
    }
}
