//! Additive approximation of the Pareto sum by coordinate scaling.
//!
//! Strong mode rounds both sets down by `t`, solves the smaller instance with a
//! witness-reporting algorithm and maps every scaled output back to the sum
//! of two original representatives, so each output point is a true sum.
//! Weak mode rounds up, solves with any algorithm and scales the result back;
//! its points only lie within `(2t, 2t)` above a true sum.

use std::collections::BTreeMap;
use std::fmt;

use crate::algorithm::{pareto_sum, Algorithm};
use crate::error::{Error, Result};
use crate::pareto::{
    pareto_front, pareto_front_nearly_sorted, ParetoSet, Point, Witness, WitnessedPoint,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxMode {
    Strong,
    Weak,
}

impl ApproxMode {
    pub fn name(self) -> &'static str {
        match self {
            ApproxMode::Strong => "strong",
            ApproxMode::Weak => "weak",
        }
    }
}

impl fmt::Display for ApproxMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxResult {
    pub points: ParetoSet,
    pub t: i64,
    /// Proven additive error bound `2t`.
    pub guarantee: i64,
    pub mode: ApproxMode,
    /// Indices into the original `P` and `Q` per output point (strong mode).
    pub witnesses: Option<Vec<Witness>>,
}

fn floor_scale(p: Point, t: i64) -> Point {
    Point::new(p.x.div_euclid(t), p.y.div_euclid(t))
}

fn ceil_scale(p: Point, t: i64) -> Point {
    Point::new(-(-p.x).div_euclid(t), -(-p.y).div_euclid(t))
}

/// Rounded point to the original point of least L1 norm rounding onto it;
/// ties go to the lexicographically smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeMap {
    t: i64,
    reps: BTreeMap<Point, usize>,
    originals: Vec<Point>,
}

impl RepresentativeMap {
    pub fn new(set: &ParetoSet, t: i64) -> Self {
        let mut reps: BTreeMap<Point, usize> = BTreeMap::new();
        for (idx, &p) in set.iter().enumerate() {
            let key = floor_scale(p, t);
            let better = |cur: usize| {
                let c = set[cur];
                (p.l1(), p) < (c.l1(), c)
            };
            match reps.get(&key) {
                Some(&cur) if !better(cur) => {}
                _ => {
                    reps.insert(key, idx);
                }
            }
        }
        RepresentativeMap {
            t,
            reps,
            originals: set.points().to_vec(),
        }
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn rep(&self, rounded: Point) -> Option<Point> {
        self.rep_index(rounded).map(|i| self.originals[i])
    }

    pub fn rep_index(&self, rounded: Point) -> Option<usize> {
        self.reps.get(&rounded).copied()
    }

    pub fn rounded_points(&self) -> Vec<Point> {
        self.reps.keys().copied().collect()
    }
}

fn check_t(t: i64) -> Result<()> {
    if t < 1 {
        return Err(Error::Config(format!(
            "scaling factor t must be at least 1, got {t}"
        )));
    }
    Ok(())
}

/// Strong `2t`-approximation; every output point is `P[i] + Q[j]`.
pub fn approximate_pareto_sum(
    p: &ParetoSet,
    q: &ParetoSet,
    t: i64,
    inner: &Algorithm,
) -> Result<ApproxResult> {
    check_t(t)?;
    if !inner.reports_witnesses() {
        return Err(Error::Config(format!(
            "strong approximation needs witnesses, which `{inner}` does not report; use --weak"
        )));
    }
    let rep_p = RepresentativeMap::new(p, t);
    let rep_q = RepresentativeMap::new(q, t);
    let sp = pareto_front(&rep_p.rounded_points())?;
    let sq = pareto_front(&rep_q.rounded_points())?;
    let scaled = pareto_sum(&sp, &sq, inner)?;
    let mut z = Vec::with_capacity(scaled.points.len());
    for s in &scaled.points {
        let w = s
            .witness
            .ok_or_else(|| Error::Invariant(format!("{inner} returned a point without witness")))?;
        let i = rep_p
            .rep_index(sp[w.p])
            .expect("front point has a representative");
        let j = rep_q
            .rep_index(sq[w.q])
            .expect("front point has a representative");
        z.push(WitnessedPoint::witnessed(p[i] + q[j], i, j));
    }
    let front = pareto_front_nearly_sorted(z);
    let witnesses = front
        .iter()
        .map(|w| w.witness.expect("witnessed"))
        .collect();
    Ok(ApproxResult {
        points: ParetoSet::new(front.iter().map(|w| w.point).collect())?,
        t,
        guarantee: 2 * t,
        mode: ApproxMode::Strong,
        witnesses: Some(witnesses),
    })
}

/// Weak `2t`-approximation; works with every inner algorithm.
pub fn weak_approximate_pareto_sum(
    p: &ParetoSet,
    q: &ParetoSet,
    t: i64,
    inner: &Algorithm,
) -> Result<ApproxResult> {
    check_t(t)?;
    let scale = |set: &ParetoSet| {
        let pts: Vec<Point> = set.iter().map(|&pt| ceil_scale(pt, t)).collect();
        pareto_front(&pts)
    };
    let (sp, sq) = (scale(p)?, scale(q)?);
    let scaled = pareto_sum(&sp, &sq, inner)?;
    let points = scaled
        .points
        .iter()
        .map(|s| Point::new(s.point.x * t, s.point.y * t))
        .collect();
    Ok(ApproxResult {
        points: ParetoSet::new(points)?,
        t,
        guarantee: 2 * t,
        mode: ApproxMode::Weak,
        witnesses: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QualityReport {
    /// Directed Hausdorff distance from the exact to the approximate set.
    pub delta_measured: i64,
    /// `|approx| / |exact|`.
    pub size_ratio: f64,
}

/// One-sided disadvantage of using `approx` in place of `exact`.
pub fn point_distance(exact: Point, approx: Point) -> i64 {
    0.max(approx.x - exact.x).max(approx.y - exact.y)
}

/// Quality of `approx` against `exact` in `O(|exact| + |approx|)`.
///
/// Along `approx` the x-gap grows and the y-gap shrinks, so the minimum of
/// their maximum sits at the first point whose `x - y` reaches that of the
/// exact point, or just before it. That crossing moves monotonically as the
/// exact point advances.
pub fn evaluate_quality(exact: &ParetoSet, approx: &ParetoSet) -> Result<QualityReport> {
    if exact.is_empty() || approx.is_empty() {
        return Err(Error::EmptyInput);
    }
    let a = approx.points();
    let mut c = 0usize;
    let mut delta = 0i64;
    for &s in exact {
        let g = s.x - s.y;
        while c < a.len() && a[c].x - a[c].y < g {
            c += 1;
        }
        let best = [c.checked_sub(1), (c < a.len()).then_some(c)]
            .into_iter()
            .flatten()
            .map(|j| point_distance(s, a[j]))
            .min()
            .expect("at least one candidate");
        delta = delta.max(best);
    }
    Ok(QualityReport {
        delta_measured: delta,
        size_ratio: approx.len() as f64 / exact.len() as f64,
    })
}

/// Quadratic reference for [`evaluate_quality`].
pub fn evaluate_quality_quadratic(exact: &ParetoSet, approx: &ParetoSet) -> Result<QualityReport> {
    if exact.is_empty() || approx.is_empty() {
        return Err(Error::EmptyInput);
    }
    let delta = exact
        .iter()
        .map(|&s| approx.iter().map(|&a| point_distance(s, a)).min().unwrap())
        .max()
        .unwrap();
    Ok(QualityReport {
        delta_measured: delta,
        size_ratio: approx.len() as f64 / exact.len() as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::{brute_force_pareto_sum, points_of};

    fn set(pairs: &[(i64, i64)]) -> ParetoSet {
        ParetoSet::from_pairs(pairs).unwrap()
    }

    fn example() -> (ParetoSet, ParetoSet) {
        (set(&[(0, 7), (3, 2), (5, 0)]), set(&[(0, 4), (4, 0)]))
    }

    #[test]
    fn strong_example() {
        let (p, q) = example();
        let r = approximate_pareto_sum(&p, &q, 2, &Algorithm::Bsc).unwrap();
        assert_eq!(r.points, set(&[(0, 11), (3, 6), (5, 4), (7, 2), (9, 0)]));
        assert_eq!(r.guarantee, 4);
        let exact = ParetoSet::new(points_of(&brute_force_pareto_sum(&p, &q))).unwrap();
        assert_eq!(
            evaluate_quality(&exact, &r.points).unwrap().delta_measured,
            0
        );
        for (pt, w) in r.points.iter().zip(r.witnesses.as_ref().unwrap()) {
            assert_eq!(*pt, p[w.p] + q[w.q]);
        }
    }

    #[test]
    fn representatives() {
        let (p, _) = example();
        let reps = RepresentativeMap::new(&p, 2);
        assert_eq!(
            reps.rounded_points(),
            vec![Point::new(0, 3), Point::new(1, 1), Point::new(2, 0)]
        );
        assert_eq!(reps.rep(Point::new(1, 1)), Some(Point::new(3, 2)));
        // (1,2) and (2,1) share the cell (0,0) and the L1 norm 3.
        let tie = RepresentativeMap::new(&set(&[(0, 3), (1, 2), (2, 1)]), 4);
        assert_eq!(tie.rep(Point::new(0, 0)), Some(Point::new(0, 3)));
        let tie = RepresentativeMap::new(&set(&[(1, 2), (2, 1)]), 4);
        assert_eq!(tie.rep(Point::new(0, 0)), Some(Point::new(1, 2)));
    }

    #[test]
    fn weak_example() {
        let (p, q) = example();
        let r = weak_approximate_pareto_sum(&p, &q, 2, &Algorithm::Bsc).unwrap();
        assert_eq!(r.points, set(&[(0, 12), (4, 6), (6, 4), (8, 2), (10, 0)]));
        assert!(r.witnesses.is_none());
        let cdxz = Algorithm::ConvCdxz(Default::default());
        assert_eq!(
            weak_approximate_pareto_sum(&p, &q, 2, &cdxz)
                .unwrap()
                .points,
            r.points
        );
    }

    #[test]
    fn unit_scale_is_exact() {
        let (p, q) = example();
        let exact = points_of(&brute_force_pareto_sum(&p, &q));
        for algo in Algorithm::all_default() {
            let weak = weak_approximate_pareto_sum(&p, &q, 1, &algo).unwrap();
            assert_eq!(weak.points.points(), exact);
            if algo.reports_witnesses() {
                let strong = approximate_pareto_sum(&p, &q, 1, &algo).unwrap();
                assert_eq!(strong.points.points(), exact);
            }
        }
    }

    #[test]
    fn mode_gating() {
        let (p, q) = example();
        let cdxz = Algorithm::ConvCdxz(Default::default());
        assert!(matches!(
            approximate_pareto_sum(&p, &q, 2, &cdxz),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            approximate_pareto_sum(&p, &q, 0, &Algorithm::Sc),
            Err(Error::Config(_))
        ));
        assert!(weak_approximate_pareto_sum(&p, &q, 0, &Algorithm::Sc).is_err());
    }

    #[test]
    fn quality_examples() {
        let s = set(&[(0, 5), (4, 0)]);
        let same = evaluate_quality(&s, &s).unwrap();
        assert_eq!(same.delta_measured, 0);
        assert_eq!(same.size_ratio, 1.0);
        assert_eq!(
            evaluate_quality(&set(&[(0, 0)]), &set(&[(3, 1)]))
                .unwrap()
                .delta_measured,
            3
        );
        let r = evaluate_quality(&s, &set(&[(1, 5)])).unwrap();
        assert_eq!(r.delta_measured, 5);
        assert_eq!(r.size_ratio, 0.5);
    }
}
