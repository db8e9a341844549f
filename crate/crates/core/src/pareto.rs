//! Points, Pareto sets, dominance and the brute-force Pareto sum.
//!
//! Every algorithm in this crate is checked against
//! [`brute_force_pareto_sum`], which materialises the full Minkowski sum and
//! filters it. It is quadratic in time and space and meant for small inputs.

use std::fmt;
use std::ops::{Add, Index};

use crate::error::{Error, Result};

/// Largest coordinate magnitude accepted anywhere in the crate.
///
/// Sums of two coordinates and the cross-multiplied rational comparisons of
/// the convex-pruning backend stay inside 128-bit intermediates under this
/// cap.
pub const MAX_COORD: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// L1 norm, used to pick representatives.
    pub fn l1(self) -> i64 {
        self.x.abs() + self.y.abs()
    }

    /// Componentwise `self <= other`.
    pub fn le(self, other: Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Add for Point {
    type Output = Point;

    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// True iff `a` is componentwise no larger than `b` and strictly smaller in
/// at least one coordinate. Equal points do not dominate each other.
pub fn dominates(a: Point, b: Point) -> bool {
    a.x <= b.x && a.y <= b.y && (a.x < b.x || a.y < b.y)
}

/// Index pair `(p, q)` certifying that an output point equals `P[p] + Q[q]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub p: usize,
    pub q: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessedPoint {
    pub point: Point,
    pub witness: Option<Witness>,
}

impl WitnessedPoint {
    pub fn new(point: Point, witness: Option<Witness>) -> Self {
        WitnessedPoint { point, witness }
    }

    pub fn witnessed(point: Point, p: usize, q: usize) -> Self {
        WitnessedPoint {
            point,
            witness: Some(Witness { p, q }),
        }
    }

    pub fn bare(point: Point) -> Self {
        WitnessedPoint {
            point,
            witness: None,
        }
    }
}

/// Strips witnesses.
pub fn points_of(items: &[WitnessedPoint]) -> Vec<Point> {
    items.iter().map(|w| w.point).collect()
}

/// True iff the list is strictly increasing in x and strictly decreasing in y.
pub fn validate_pareto_set(points: &[Point]) -> bool {
    points
        .windows(2)
        .all(|w| w[0].x < w[1].x && w[0].y > w[1].y)
}

fn check_magnitude(points: &[Point]) -> Result<()> {
    for p in points {
        for v in [p.x, p.y] {
            if v.unsigned_abs() > MAX_COORD as u64 {
                return Err(Error::CoordinateOutOfRange { value: v });
            }
        }
    }
    Ok(())
}

/// A non-empty point list sorted by strictly increasing x with strictly
/// decreasing y.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParetoSet {
    points: Vec<Point>,
}

impl ParetoSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_magnitude(&points)?;
        if let Some(i) = points
            .windows(2)
            .position(|w| !(w[0].x < w[1].x && w[0].y > w[1].y))
        {
            return Err(Error::Invariant(format!(
                "points {} and {} at positions {} and {} break the Pareto order",
                points[i],
                points[i + 1],
                i,
                i + 1
            )));
        }
        Ok(ParetoSet { points })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().copied().map(Point::from).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn first(&self) -> Point {
        self.points[0]
    }

    pub fn last(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    /// Maximum coordinate magnitude over both axes (the instance's `W`).
    pub fn bound(&self) -> i64 {
        self.points
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .max()
            .unwrap_or(0)
    }
}

impl Index<usize> for ParetoSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

impl<'a> IntoIterator for &'a ParetoSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Non-dominated points of `points`, deduplicated, in Pareto order.
pub fn pareto_front(points: &[Point]) -> Result<ParetoSet> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    let mut front: Vec<Point> = Vec::new();
    for p in sorted {
        // Sorted by (x, y): p survives iff its y beats every earlier point.
        match front.last() {
            Some(last) if last.y <= p.y => {}
            _ => front.push(p),
        }
    }
    ParetoSet::new(front)
}

/// Skyline of the full Minkowski sum, one witness per output point.
///
/// Among several pairs producing the same output point the lexicographically
/// smallest `(p, q)` is reported.
pub fn brute_force_pareto_sum(p: &ParetoSet, q: &ParetoSet) -> Vec<WitnessedPoint> {
    let mut sums: Vec<(Point, usize, usize)> = Vec::with_capacity(p.len() * q.len());
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            sums.push((*a + *b, i, j));
        }
    }
    sums.sort_unstable();
    let mut out: Vec<WitnessedPoint> = Vec::new();
    for (s, i, j) in sums {
        match out.last() {
            Some(last) if last.point.y <= s.y => {}
            _ => out.push(WitnessedPoint::witnessed(s, i, j)),
        }
    }
    out
}

/// Pareto front of witnessed points arriving in roughly increasing x order.
///
/// Each new point is placed by scanning back from the end of the current
/// front; points it dominates are removed. Nearly sorted input costs close to
/// linear time. Ties on identical points keep the earlier one.
pub fn pareto_front_nearly_sorted(
    items: impl IntoIterator<Item = WitnessedPoint>,
) -> Vec<WitnessedPoint> {
    let mut front: Vec<WitnessedPoint> = Vec::new();
    for item in items {
        let z = item.point;
        let mut pos = front.len();
        while pos > 0 && front[pos - 1].point.x >= z.x {
            pos -= 1;
        }
        if pos > 0 && front[pos - 1].point.le(z) {
            continue;
        }
        if pos < front.len() && front[pos].point.x == z.x && front[pos].point.y <= z.y {
            continue;
        }
        let mut end = pos;
        while end < front.len() && z.le(front[end].point) {
            end += 1;
        }
        front.splice(pos..end, std::iter::once(item));
    }
    front
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(pairs: &[(i64, i64)]) -> Vec<Point> {
        pairs.iter().copied().map(Point::from).collect()
    }

    fn set(pairs: &[(i64, i64)]) -> ParetoSet {
        ParetoSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(Point::new(1, 3), Point::new(2, 3)));
        assert!(!dominates(Point::new(1, 3), Point::new(1, 3)));
        assert!(!dominates(Point::new(2, 2), Point::new(1, 3)));
    }

    #[test]
    fn front_examples() {
        let input = pts(&[(0, 5), (2, 3), (1, 3), (3, 1), (2, 2), (4, 0)]);
        let front = pareto_front(&input).unwrap();
        assert_eq!(
            front.points(),
            pts(&[(0, 5), (1, 3), (2, 2), (3, 1), (4, 0)])
        );
        assert_eq!(
            pareto_front(&pts(&[(0, 0)])).unwrap().points(),
            pts(&[(0, 0)])
        );
        assert_eq!(
            pareto_front(&pts(&[(1, 1), (1, 1)])).unwrap().points(),
            pts(&[(1, 1)])
        );
        assert!(matches!(pareto_front(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn validate_examples() {
        assert!(validate_pareto_set(&pts(&[(0, 3), (1, 1), (2, 0)])));
        assert!(!validate_pareto_set(&pts(&[(0, 3), (0, 1)])));
        assert!(!validate_pareto_set(&pts(&[(0, 1), (1, 2)])));
    }

    #[test]
    fn pareto_set_rejects_bad_input() {
        assert!(ParetoSet::new(vec![]).is_err());
        assert!(ParetoSet::from_pairs(&[(0, 1), (1, 2)]).is_err());
        assert!(matches!(
            ParetoSet::from_pairs(&[(0, MAX_COORD + 1)]),
            Err(Error::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn brute_force_examples() {
        let p = set(&[(0, 3), (1, 1), (2, 0)]);
        let q = set(&[(0, 2), (2, 0)]);
        let s = brute_force_pareto_sum(&p, &q);
        assert_eq!(
            points_of(&s),
            pts(&[(0, 5), (1, 3), (2, 2), (3, 1), (4, 0)])
        );

        let p = set(&[(0, 2), (1, 0)]);
        let q = set(&[(0, 1), (2, 0)]);
        let s = brute_force_pareto_sum(&p, &q);
        assert_eq!(points_of(&s), pts(&[(0, 3), (1, 1), (3, 0)]));

        let zero = set(&[(0, 0)]);
        let q = set(&[(1, 9), (4, 4), (7, 2)]);
        assert_eq!(points_of(&brute_force_pareto_sum(&zero, &q)), q.points());
    }

    #[test]
    fn brute_force_witness_tie_break() {
        // (1, 1) arises from (0,1)+(1,0) and (1,0)+(0,1).
        let p = set(&[(0, 1), (1, 0)]);
        let q = set(&[(0, 1), (1, 0)]);
        let s = brute_force_pareto_sum(&p, &q);
        let mid = s.iter().find(|w| w.point == Point::new(1, 1)).unwrap();
        assert_eq!(mid.witness, Some(Witness { p: 0, q: 1 }));
    }

    #[test]
    fn nearly_sorted_front_handles_disorder() {
        let items = pts(&[(0, 9), (3, 5), (2, 6), (2, 7), (5, 5), (4, 1), (6, 0)])
            .into_iter()
            .map(WitnessedPoint::bare);
        let front = pareto_front_nearly_sorted(items);
        assert_eq!(
            points_of(&front),
            pts(&[(0, 9), (2, 6), (3, 5), (4, 1), (6, 0)])
        );
    }

    #[test]
    fn nearly_sorted_front_equal_x() {
        let items = [(0, 9), (5, 6), (5, 4), (5, 4), (5, 8), (7, 0)]
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| WitnessedPoint::witnessed(Point::new(x, y), i, 0));
        let front = pareto_front_nearly_sorted(items);
        assert_eq!(points_of(&front), pts(&[(0, 9), (5, 4), (7, 0)]));
        assert_eq!(front[1].witness.unwrap().p, 2);
    }
}
