//! Min-plus convolution backends.
//!
//! `C[k] = min_{i + j = k} A[i] + B[j]` for arrays of lengths `n` and `m`,
//! producing `n + m - 1` values. The backends:
//!
//! | backend | input | time | witnesses |
//! |---|---|---|---|
//! | [`naive_minplus`] | any | `O(nm)` | yes |
//! | [`enhanced_minplus`] | non-increasing | `O(runs(A) * runs(B) + n + m)` | yes |
//! | [`convex_minplus`] | convex | `O(n + m)` | yes (monotone path) |
//! | [`convex_pruning_minplus`] | any | output dependent | yes |
//! | [`cdxz_minplus`] | non-increasing, bounded | subquadratic | no |

mod cdxz;
mod convex;
mod ntt;
mod pruning;
mod rational;

pub use cdxz::{cdxz_detailed, cdxz_minplus, CdxzConfig, CdxzScratch, DEFAULT_MAX_TRANSFORM_LEN};
pub use convex::{
    convex_minplus, in_relevant_region, lower_hull_approx, ConvexApprox, HullApproxConvolution,
};
pub use ntt::{poly_multiply_counts, NTT_MODULUS};
pub use pruning::{
    convex_pruning_minplus, convex_pruning_minplus_traced, PruneStats, Rect, DEFAULT_BASE_THRESHOLD,
};
pub use rational::Rational;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvResult {
    pub values: Vec<i64>,
    /// `witnesses[k] = i` with `values[k] = A[i] + B[k - i]`.
    pub witnesses: Option<Vec<usize>>,
}

impl ConvResult {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Output length for inputs of the given lengths.
pub(crate) fn conv_len(n: usize, m: usize) -> usize {
    if n == 0 || m == 0 {
        0
    } else {
        n + m - 1
    }
}

/// A non-increasing array with entries in `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneArray {
    values: Vec<i64>,
    bound: i64,
}

impl MonotoneArray {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        check_non_increasing(&values)?;
        if let Some(&v) = values.iter().find(|&&v| v < 0) {
            return Err(Error::NegativeCoordinate { value: v });
        }
        let bound = values.first().copied().unwrap_or(0);
        Ok(MonotoneArray { values, bound })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub(crate) fn check_non_increasing(values: &[i64]) -> Result<()> {
    match values.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(Error::MonotonicityViolated { index: i + 1 }),
        None => Ok(()),
    }
}

pub(crate) fn is_non_increasing(values: &[i64]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

/// Exact double loop. Works for arbitrary arrays; the witness is the smallest
/// minimising index.
pub fn naive_minplus(a: &[i64], b: &[i64], want_witnesses: bool) -> ConvResult {
    let len = conv_len(a.len(), b.len());
    let mut values = vec![i64::MAX; len];
    let mut wit = vec![0usize; if want_witnesses { len } else { 0 }];
    for (i, &av) in a.iter().enumerate() {
        let row = &mut values[i..i + b.len()];
        if want_witnesses {
            for (j, (c, &bv)) in row.iter_mut().zip(b).enumerate() {
                if av + bv < *c {
                    *c = av + bv;
                    wit[i + j] = i;
                }
            }
        } else {
            for (c, &bv) in row.iter_mut().zip(b) {
                *c = (*c).min(av + bv);
            }
        }
    }
    ConvResult {
        values,
        witnesses: want_witnesses.then_some(wit),
    }
}

/// Maximal runs of equal values as `(start, end_inclusive, value)`.
pub(crate) fn runs(values: &[i64]) -> Vec<(usize, usize, i64)> {
    let mut out: Vec<(usize, usize, i64)> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(run) if run.2 == v => run.1 = i,
            _ => out.push((i, i, v)),
        }
    }
    out
}

/// Grouped convolution of non-increasing arrays.
///
/// Candidates are written only at sums of run starts, then a left-to-right
/// running minimum fills the remaining positions. Correct because the result
/// of two non-increasing arrays is itself non-increasing.
pub fn enhanced_minplus(a: &[i64], b: &[i64], want_witnesses: bool) -> Result<ConvResult> {
    check_non_increasing(a)?;
    check_non_increasing(b)?;
    Ok(enhanced_unchecked(a, b, want_witnesses))
}

pub(crate) fn enhanced_unchecked(a: &[i64], b: &[i64], want_witnesses: bool) -> ConvResult {
    let runs_a = runs(a);
    let runs_b = runs(b);
    enhanced_with_runs(a.len(), b.len(), &runs_a, &runs_b, want_witnesses)
}

pub(crate) fn enhanced_with_runs(
    n: usize,
    m: usize,
    runs_a: &[(usize, usize, i64)],
    runs_b: &[(usize, usize, i64)],
    want_witnesses: bool,
) -> ConvResult {
    let len = conv_len(n, m);
    let mut values = vec![i64::MAX; len];
    let mut wit = vec![0usize; if want_witnesses { len } else { 0 }];
    for &(sa, _, va) in runs_a {
        for &(sb, _, vb) in runs_b {
            let k = sa + sb;
            if va + vb < values[k] {
                values[k] = va + vb;
                if want_witnesses {
                    wit[k] = sa;
                }
            }
        }
    }
    for k in 1..len {
        if values[k - 1] <= values[k] {
            values[k] = values[k - 1];
            if want_witnesses {
                // The witness of k-1 extends to k by stepping in B, or in A
                // when B is exhausted; both keep the value by monotonicity.
                let i = wit[k - 1];
                wit[k] = if k - i < m { i } else { i + 1 };
            }
        }
    }
    ConvResult {
        values,
        witnesses: want_witnesses.then_some(wit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witnesses(a: &[i64], b: &[i64], r: &ConvResult) {
        for (k, &i) in r.witnesses.as_ref().unwrap().iter().enumerate() {
            assert!(i < a.len() && k - i < b.len());
            assert_eq!(a[i] + b[k - i], r.values[k]);
        }
    }

    #[test]
    fn naive_examples() {
        assert_eq!(
            naive_minplus(&[5, 3, 1], &[4, 2], false).values,
            vec![9, 7, 5, 3]
        );
        assert_eq!(naive_minplus(&[0], &[0], false).values, vec![0]);
        let r = naive_minplus(&[2, 0, 0], &[1, 1, 0], true);
        assert_eq!(r.values, vec![3, 1, 1, 0, 0]);
        assert_eq!(r.witnesses, Some(vec![0, 1, 1, 1, 2]));
    }

    #[test]
    fn naive_non_monotone() {
        let r = naive_minplus(&[3, -1, 4], &[0, 5, -2], true);
        assert_eq!(r.values, vec![3, -1, 1, -3, 2]);
        check_witnesses(&[3, -1, 4], &[0, 5, -2], &r);
    }

    #[test]
    fn enhanced_examples() {
        let r = enhanced_minplus(&[5, 3, 1], &[4, 2], true).unwrap();
        assert_eq!(r.values, vec![9, 7, 5, 3]);
        check_witnesses(&[5, 3, 1], &[4, 2], &r);
        let r = enhanced_minplus(&[7, 7, 7], &[7, 7], true).unwrap();
        assert_eq!(r.values, vec![14; 4]);
        check_witnesses(&[7, 7, 7], &[7, 7], &r);
    }

    #[test]
    fn enhanced_rejects_increasing() {
        assert!(matches!(
            enhanced_minplus(&[1, 2], &[0], false),
            Err(Error::MonotonicityViolated { index: 1 })
        ));
    }

    #[test]
    fn monotone_array_invariants() {
        let m = MonotoneArray::new(vec![4, 4, 2, 0]).unwrap();
        assert_eq!(m.bound(), 4);
        assert!(MonotoneArray::new(vec![1, 2]).is_err());
        assert!(MonotoneArray::new(vec![1, -1]).is_err());
    }

    #[test]
    fn runs_split() {
        assert_eq!(
            runs(&[5, 5, 3, 1, 1, 1]),
            vec![(0, 1, 5), (2, 2, 3), (3, 5, 1)]
        );
    }
}
