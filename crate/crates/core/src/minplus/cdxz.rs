//! Subquadratic convolution of bounded monotone arrays by scaling and error
//! correction.
//!
//! Phase one convolves the scaled arrays `A' = ⌊A / s⌋`, `B' = ⌊B / s⌋` with
//! the grouped algorithm. Every true witness of `C[k]` then has
//! `A'[i] + B'[k - i] = C'[k] + b` for some `b ∈ {0, 1}`. Phase two counts, for
//! each `k` and `b`, the rounding residues `A[i] - s·A'[i] + B[j] - s·B'[j]` of
//! all pairs whose scaled sum agrees with `C'[k] + b` modulo a prime `p`, via
//! one exact polynomial product. Pairs that agree only modulo `p` are
//! enumerated run pair by run pair and subtracted, leaving the residues of the
//! exact pairs, whose minimum restores `C[k]`.

use rand::seq::SliceRandom;

use super::ntt::{poly_multiply_counts, poly_multiply_transform};
use super::{check_non_increasing, conv_len, enhanced_unchecked, runs, ConvResult};
use crate::error::{Error, Result};
use crate::generators::rng_from_seed;

/// Packed polynomial length above which the product is refused.
pub const DEFAULT_MAX_TRANSFORM_LEN: usize = 1 << 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdxzConfig {
    pub scale: u64,
    pub prime: u64,
    pub max_transform_len: usize,
    /// Always use the number-theoretic transform, never the sparse product.
    pub force_transform: bool,
}

impl Default for CdxzConfig {
    fn default() -> Self {
        CdxzConfig {
            scale: 25,
            prime: 2,
            max_transform_len: DEFAULT_MAX_TRANSFORM_LEN,
            force_transform: false,
        }
    }
}

fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CdxzConfig {
    pub fn new(scale: u64, prime: u64) -> Result<Self> {
        let cfg = CdxzConfig {
            scale,
            prime,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `scale = ⌈n^0.2⌉` and a uniformly random prime in `[n^0.4, 2·n^0.4]`.
    pub fn theoretical(n: usize, seed: u64) -> Self {
        let n = n.max(2) as f64;
        let scale = (n.powf(0.2) - 1e-9).ceil() as u64;
        let lo = ((n.powf(0.4) - 1e-9).ceil() as u64).max(2);
        let hi = ((2.0 * n.powf(0.4) + 1e-9).floor() as u64).max(lo);
        let primes: Vec<u64> = (lo..=hi).filter(|&v| is_prime(v)).collect();
        let prime = match primes.choose(&mut rng_from_seed(seed)) {
            Some(&p) => p,
            None => (hi..).find(|&v| is_prime(v)).expect("primes are unbounded"),
        };
        CdxzConfig {
            scale: scale.max(1),
            prime,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale < 1 {
            return Err(Error::Config("cdxz scale must be at least 1".into()));
        }
        if self.prime < 2 {
            return Err(Error::Config("cdxz prime must be at least 2".into()));
        }
        Ok(())
    }
}

/// Intermediate state of one call.
#[derive(Clone, Debug, Default)]
pub struct CdxzScratch {
    pub a_scaled: Vec<i64>,
    pub b_scaled: Vec<i64>,
    /// Convolution of the scaled arrays.
    pub c_scaled: Vec<i64>,
    /// `s_b[k]`, the smallest residue sum of an exact pair, per offset `b`.
    pub min_residue: [Vec<Option<u32>>; 2],
    /// Number of pairs matching only modulo the prime, per offset `b`.
    pub pseudo_witnesses: [u64; 2],
    pub transform_len: usize,
}

pub fn cdxz_minplus(a: &[i64], b: &[i64], config: &CdxzConfig) -> Result<ConvResult> {
    cdxz_detailed(a, b, config).map(|(r, _)| r)
}

pub fn cdxz_detailed(
    a: &[i64],
    b: &[i64],
    config: &CdxzConfig,
) -> Result<(ConvResult, CdxzScratch)> {
    config.validate()?;
    check_non_increasing(a)?;
    check_non_increasing(b)?;
    let len = conv_len(a.len(), b.len());
    let no_witness = |values| ConvResult {
        values,
        witnesses: None,
    };
    if len == 0 {
        return Ok((no_witness(vec![]), CdxzScratch::default()));
    }
    let s = config.scale as i64;
    let p = config.prime as i64;
    let a_scaled: Vec<i64> = a.iter().map(|v| v.div_euclid(s)).collect();
    let b_scaled: Vec<i64> = b.iter().map(|v| v.div_euclid(s)).collect();
    let c_scaled = enhanced_unchecked(&a_scaled, &b_scaled, false).values;
    let mut scratch = CdxzScratch {
        a_scaled,
        b_scaled,
        c_scaled,
        ..Default::default()
    };
    if s == 1 {
        return Ok((no_witness(scratch.c_scaled.clone()), scratch));
    }

    let ra: Vec<usize> = a.iter().map(|v| v.rem_euclid(s) as usize).collect();
    let rb: Vec<usize> = b.iter().map(|v| v.rem_euclid(s) as usize).collect();

    // Kronecker packing of x^residue y^(scaled mod p) z^index.
    let rx = 2 * s as usize;
    let ry = 2 * p as usize - 1;
    let packed_len = (rx as u128) * (ry as u128) * (len as u128);
    if packed_len.next_power_of_two() > config.max_transform_len as u128 {
        return Err(Error::Config(format!(
            "cdxz packed length {packed_len} exceeds the budget of {}; use a smaller scale or prime",
            config.max_transform_len
        )));
    }
    let pack =
        |res: usize, scaled: i64, idx: usize| res + rx * (scaled.rem_euclid(p) as usize + ry * idx);
    let poly = |res: &[usize], scaled: &[i64]| {
        let last = pack(s as usize - 1, p - 1, res.len() - 1);
        let mut v = vec![0u64; last + 1];
        for (idx, (&r, &sc)) in res.iter().zip(scaled).enumerate() {
            v[pack(r, sc, idx)] = 1;
        }
        v
    };
    let pa = poly(&ra, &scratch.a_scaled);
    let pb = poly(&rb, &scratch.b_scaled);
    scratch.transform_len = (pa.len() + pb.len() - 1).next_power_of_two();
    let product = if config.force_transform {
        poly_multiply_transform(&pa, &pb)
    } else {
        poly_multiply_counts(&pa, &pb)?
    };

    // counts[b][k * width + c]: pairs congruent to C'[k] + b with residue sum c.
    let width = rx - 1;
    let c_scaled = &scratch.c_scaled;
    let mut counts: [Vec<i64>; 2] = [vec![0; len * width], vec![0; len * width]];
    for (off, cnt) in counts.iter_mut().enumerate() {
        for k in 0..len {
            let r = (c_scaled[k] + off as i64).rem_euclid(p) as usize;
            for e_y in [r, r + p as usize] {
                if e_y >= ry {
                    continue;
                }
                let base = rx * (e_y + ry * k);
                for c in 0..width {
                    if let Some(&v) = product.get(base + c) {
                        cnt[k * width + c] += v as i64;
                    }
                }
            }
        }
    }

    // Pseudo-witness removal, one run pair at a time.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); p as usize];
    for (k, &v) in c_scaled.iter().enumerate() {
        buckets[v.rem_euclid(p) as usize].push(k);
    }
    let runs_a = runs(&scratch.a_scaled);
    let runs_b = runs(&scratch.b_scaled);
    for &(a_s, a_e, va) in &runs_a {
        for &(b_t, b_e, vb) in &runs_b {
            let delta = va + vb;
            let (k_lo, k_hi) = (a_s + b_t, a_e + b_e);
            for (off, cnt) in counts.iter_mut().enumerate() {
                let bucket = &buckets[(delta - off as i64).rem_euclid(p) as usize];
                let start = bucket.partition_point(|&k| k < k_lo);
                for &k in bucket[start..].iter().take_while(|&&k| k <= k_hi) {
                    if c_scaled[k] + off as i64 == delta {
                        continue;
                    }
                    let i_lo = a_s.max(k.saturating_sub(b_e));
                    let i_hi = a_e.min(k - b_t);
                    let row = &mut cnt[k * width..(k + 1) * width];
                    for i in i_lo..=i_hi {
                        row[ra[i] + rb[k - i]] -= 1;
                    }
                    scratch.pseudo_witnesses[off] += (i_hi + 1 - i_lo) as u64;
                }
            }
        }
    }

    let mut values = vec![0i64; len];
    for (off, cnt) in counts.iter().enumerate() {
        scratch.min_residue[off] = (0..len)
            .map(|k| {
                let row = &cnt[k * width..(k + 1) * width];
                debug_assert!(row.iter().all(|&v| v >= 0));
                row.iter().position(|&v| v > 0).map(|c| c as u32)
            })
            .collect();
    }
    for (k, out) in values.iter_mut().enumerate() {
        let best = (0..2)
            .filter_map(|off| {
                scratch.min_residue[off][k].map(|c| s * (c_scaled[k] + off as i64) + c as i64)
            })
            .min();
        *out =
            best.ok_or_else(|| Error::Invariant(format!("no exact pair survives at index {k}")))?;
    }
    Ok((no_witness(values), scratch))
}
