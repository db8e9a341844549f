//! Direct Pareto-sum algorithms working on the sum matrix `M[i][j] = P[i] + Q[j]`.
//!
//! * [`sort_compare`]: k-way merge of the columns of `M` through a priority
//!   queue, `O(nm log m)` time and `O(m)` queue space.
//! * [`successive_sweep`]: finds output points one by one with a staircase
//!   scan over the columns, `O((n + m) k)`.
//! * [`bucketsort_compare`]: bucket array over x, `O(nm + W)`.
//!
//! All three report a witness for every output point.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::pareto::{ParetoSet, Point, WitnessedPoint};

/// Default cap on the number of buckets used by [`bucketsort_compare`].
pub const DEFAULT_BUCKET_BUDGET: u64 = 1 << 31;

pub fn sort_compare(p: &ParetoSet, q: &ParetoSet) -> Vec<WitnessedPoint> {
    let (pp, qq) = (p.points(), q.points());
    let mut heap: BinaryHeap<Reverse<(i64, i64, usize, usize)>> = qq
        .iter()
        .enumerate()
        .map(|(j, b)| {
            let s = pp[0] + *b;
            Reverse((s.x, s.y, 0, j))
        })
        .collect();
    let mut out: Vec<WitnessedPoint> = Vec::new();
    while let Some(Reverse((x, y, i, j))) = heap.pop() {
        // Extraction is lexicographic, so x never decreases and a point is
        // dominated iff its y does not beat the last accepted one.
        let bar = match out.last() {
            Some(last) if last.point.y <= y => last.point.y,
            _ => {
                out.push(WitnessedPoint::witnessed(Point::new(x, y), i, j));
                y
            }
        };
        // Column successors dominated by the last accepted point can never be
        // output; skip past them.
        let mut next = i + 1;
        while next < pp.len() && pp[next].y + qq[j].y >= bar {
            next += 1;
        }
        if next < pp.len() {
            let s = pp[next] + qq[j];
            heap.push(Reverse((s.x, s.y, next, j)));
        }
    }
    out
}

/// Successive sweep search. Returns the output and the number of
/// range-min rounds performed (one per output point plus the final empty
/// round that ends the search).
pub fn successive_sweep_with_rounds(p: &ParetoSet, q: &ParetoSet) -> (Vec<WitnessedPoint>, usize) {
    let (pp, qq) = (p.points(), q.points());
    let n = pp.len();
    // M[0][0] has the unique smallest x and is always in the skyline.
    let mut out = vec![WitnessedPoint::witnessed(pp[0] + qq[0], 0, 0)];
    let mut rounds = 0;
    loop {
        rounds += 1;
        let y_max = out.last().unwrap().point.y;
        // In column j the entries with y < y_max form a suffix starting at
        // some row r_j, and r_j is non-increasing in j. Walk the staircase
        // upwards from the last row, carrying the row across columns.
        let mut best: Option<(i64, i64, usize, usize)> = None;
        let mut row = n - 1;
        for (j, b) in qq.iter().enumerate() {
            if pp[row].y + b.y >= y_max {
                continue;
            }
            while row > 0 && pp[row - 1].y + b.y < y_max {
                row -= 1;
            }
            let s = pp[row] + *b;
            // Ties on the candidate point go to the smaller (x, y, row, column).
            let cand = (s.x, s.y, row, j);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        match best {
            Some((x, y, i, j)) => out.push(WitnessedPoint::witnessed(Point::new(x, y), i, j)),
            None => break,
        }
    }
    (out, rounds)
}

pub fn successive_sweep(p: &ParetoSet, q: &ParetoSet) -> Vec<WitnessedPoint> {
    successive_sweep_with_rounds(p, q).0
}

pub fn bucketsort_compare(p: &ParetoSet, q: &ParetoSet) -> Result<Vec<WitnessedPoint>> {
    bucketsort_compare_with_budget(p, q, DEFAULT_BUCKET_BUDGET)
}

/// Bucket sort and compare with an explicit cap on the bucket count.
///
/// x-coordinates are shifted so each set starts at 0; the shift is undone on
/// output. y-coordinates are used as given.
pub fn bucketsort_compare_with_budget(
    p: &ParetoSet,
    q: &ParetoSet,
    budget: u64,
) -> Result<Vec<WitnessedPoint>> {
    let (off_p, off_q) = (p.first().x, q.first().x);
    let span = (p.last().x - off_p) as u64 + (q.last().x - off_q) as u64 + 1;
    if span > budget {
        return Err(Error::BudgetExceeded {
            what: "bucket array",
            requested: span,
            budget,
            hint: "; use the sort & compare algorithm for sparse inputs",
        });
    }
    let len = span as usize;
    let mut best = vec![i64::MAX; len];
    let mut wit = vec![(0u32, 0u32); len];
    let qs: Vec<(usize, i64)> = q.iter().map(|b| ((b.x - off_q) as usize, b.y)).collect();
    for (i, a) in p.iter().enumerate() {
        let ax = (a.x - off_p) as usize;
        for (j, &(bx, by)) in qs.iter().enumerate() {
            let k = ax + bx;
            let y = a.y + by;
            // Strict comparison keeps the lexicographically first witness.
            if y < best[k] {
                best[k] = y;
                wit[k] = (i as u32, j as u32);
            }
        }
    }
    let mut out = Vec::new();
    let mut level = i64::MAX;
    for (k, &y) in best.iter().enumerate() {
        if y < level {
            level = y;
            let (i, j) = wit[k];
            out.push(WitnessedPoint::witnessed(
                Point::new(k as i64 + off_p + off_q, y),
                i as usize,
                j as usize,
            ));
        }
    }
    Ok(out)
}
