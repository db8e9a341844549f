//! Convex pruning over the index square.
//!
//! Index rectangles are split recursively. A rectangle is dropped when the
//! corner closest to the witness path is outside the relevant region, since
//! the region outside on either side of the path is closed under moving away
//! from the path: above-path pairs stay outside when `i` decreases or `j`
//! increases, below-path pairs when `i` increases or `j` decreases. The
//! checked corner is therefore `(i_hi, j_lo)` above the path and
//! `(i_lo, j_hi)` below it. Relevant rectangles are solved with the grouped
//! convolution and min-merged into the result.

use super::convex::HullApproxConvolution;
use super::rational::Rational;
use super::{conv_len, enhanced_unchecked, is_non_increasing, naive_minplus, ConvResult};

/// Rectangles with both sides at most this long are solved directly.
pub const DEFAULT_BASE_THRESHOLD: usize = 64;

/// Inclusive index rectangle `[i_lo, i_hi] x [j_lo, j_hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    pub i_lo: usize,
    pub i_hi: usize,
    pub j_lo: usize,
    pub j_hi: usize,
}

impl Rect {
    pub fn area(&self) -> u64 {
        (self.i_hi - self.i_lo + 1) as u64 * (self.j_hi - self.j_lo + 1) as u64
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        (self.i_lo..=self.i_hi).contains(&i) && (self.j_lo..=self.j_hi).contains(&j)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PruneStats {
    /// Index pairs inside discarded rectangles.
    pub pruned_pairs: u64,
    pub total_pairs: u64,
    pub rects_pruned: usize,
    pub rects_solved: usize,
    /// `max(1, Γ_A, Γ_B)` of the hull approximations.
    pub gamma: Rational,
}

impl PruneStats {
    pub fn pruned_fraction(&self) -> f64 {
        if self.total_pairs == 0 {
            0.0
        } else {
            self.pruned_pairs as f64 / self.total_pairs as f64
        }
    }
}

pub fn convex_pruning_minplus(
    a: &[i64],
    b: &[i64],
    want_witnesses: bool,
    base_threshold: usize,
) -> (ConvResult, PruneStats) {
    let (r, s, _) = run(a, b, want_witnesses, base_threshold, false);
    (r, s)
}

/// Same as [`convex_pruning_minplus`] and additionally returns every
/// discarded rectangle.
pub fn convex_pruning_minplus_traced(
    a: &[i64],
    b: &[i64],
    want_witnesses: bool,
    base_threshold: usize,
) -> (ConvResult, PruneStats, Vec<Rect>) {
    run(a, b, want_witnesses, base_threshold, true)
}

fn run(
    a: &[i64],
    b: &[i64],
    want_witnesses: bool,
    base_threshold: usize,
    trace: bool,
) -> (ConvResult, PruneStats, Vec<Rect>) {
    let len = conv_len(a.len(), b.len());
    if len == 0 {
        let stats = PruneStats {
            pruned_pairs: 0,
            total_pairs: 0,
            rects_pruned: 0,
            rects_solved: 0,
            gamma: Rational::ONE,
        };
        return (naive_minplus(a, b, want_witnesses), stats, vec![]);
    }
    let base = base_threshold.max(1);
    let conv = HullApproxConvolution::new(a, b);
    let monotone = is_non_increasing(a) && is_non_increasing(b);

    let mut values = vec![i64::MAX; len];
    let mut wit = vec![0usize; if want_witnesses { len } else { 0 }];
    let mut stats = PruneStats {
        pruned_pairs: 0,
        total_pairs: a.len() as u64 * b.len() as u64,
        rects_pruned: 0,
        rects_solved: 0,
        gamma: conv.gamma,
    };
    let mut pruned = Vec::new();

    let mut stack = vec![Rect {
        i_lo: 0,
        i_hi: a.len() - 1,
        j_lo: 0,
        j_hi: b.len() - 1,
    }];
    while let Some(r) = stack.pop() {
        let lower_right_in = conv.in_region(r.i_hi, r.j_lo);
        let upper_left_in = conv.in_region(r.i_lo, r.j_hi);
        let discard = (!lower_right_in && conv.above_path(r.i_hi, r.j_lo))
            || (!upper_left_in && conv.below_path(r.i_lo, r.j_hi));
        if discard {
            stats.pruned_pairs += r.area();
            stats.rects_pruned += 1;
            if trace {
                pruned.push(r);
            }
            continue;
        }
        let small = r.i_hi - r.i_lo < base && r.j_hi - r.j_lo < base;
        if (lower_right_in && upper_left_in) || small {
            stats.rects_solved += 1;
            let sa = &a[r.i_lo..=r.i_hi];
            let sb = &b[r.j_lo..=r.j_hi];
            let block = if monotone {
                enhanced_unchecked(sa, sb, want_witnesses)
            } else {
                naive_minplus(sa, sb, want_witnesses)
            };
            let off = r.i_lo + r.j_lo;
            for (t, &v) in block.values.iter().enumerate() {
                if v < values[off + t] {
                    values[off + t] = v;
                    if let Some(w) = &block.witnesses {
                        wit[off + t] = r.i_lo + w[t];
                    }
                }
            }
            continue;
        }
        let i_mid = r.i_lo + (r.i_hi - r.i_lo) / 2;
        let j_mid = r.j_lo + (r.j_hi - r.j_lo) / 2;
        let i_parts: &[(usize, usize)] = if r.i_hi > r.i_lo {
            &[(r.i_lo, i_mid), (i_mid + 1, r.i_hi)]
        } else {
            &[(r.i_lo, r.i_hi)]
        };
        let j_parts: &[(usize, usize)] = if r.j_hi > r.j_lo {
            &[(r.j_lo, j_mid), (j_mid + 1, r.j_hi)]
        } else {
            &[(r.j_lo, r.j_hi)]
        };
        for &(i_lo, i_hi) in i_parts {
            for &(j_lo, j_hi) in j_parts {
                stack.push(Rect {
                    i_lo,
                    i_hi,
                    j_lo,
                    j_hi,
                });
            }
        }
    }
    let result = ConvResult {
        values,
        witnesses: want_witnesses.then_some(wit),
    };
    (result, stats, pruned)
}
