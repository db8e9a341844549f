//! Exact multiplication of non-negative integer polynomials.
//!
//! Number-theoretic transform over `p = 2^64 - 2^32 + 1`, which has 2-adic
//! order 32 and fast reduction. Products are exact as long as every output
//! coefficient is below `p`; this is checked up front.

use crate::error::{Error, Result};

pub const NTT_MODULUS: u64 = 0xFFFF_FFFF_0000_0001;
const EPSILON: u64 = 0xFFFF_FFFF; // 2^64 mod p
const GENERATOR: u64 = 7;
const TWO_ADICITY: u32 = 32;

#[inline]
fn reduce128(x: u128) -> u64 {
    let lo = x as u64;
    let hi = (x >> 64) as u64;
    let hi_hi = hi >> 32;
    let hi_lo = hi & EPSILON;
    // x = lo + hi_lo * 2^64 + hi_hi * 2^96, with 2^64 = EPSILON and 2^96 = -1.
    let (mut t0, borrow) = lo.overflowing_sub(hi_hi);
    if borrow {
        t0 = t0.wrapping_sub(EPSILON);
    }
    let t1 = hi_lo * EPSILON;
    let (mut r, carry) = t0.overflowing_add(t1);
    if carry {
        r = r.wrapping_add(EPSILON);
    }
    if r >= NTT_MODULUS {
        r -= NTT_MODULUS;
    }
    r
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    reduce128(a as u128 * b as u128)
}

#[inline]
fn add(a: u64, b: u64) -> u64 {
    let (s, over) = a.overflowing_add(b);
    let (s2, under) = s.overflowing_sub(NTT_MODULUS);
    if over || !under {
        s2
    } else {
        s
    }
}

#[inline]
fn sub(a: u64, b: u64) -> u64 {
    let (d, under) = a.overflowing_sub(b);
    if under {
        d.wrapping_add(NTT_MODULUS)
    } else {
        d
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inverse(a: u64) -> u64 {
    pow(a, NTT_MODULUS - 2)
}

/// In-place iterative radix-2 transform; `invert` computes the unscaled
/// inverse.
fn transform(data: &mut [u64], invert: bool) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let log_n = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - log_n);
        if i < j {
            data.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w_len = pow(GENERATOR, (NTT_MODULUS - 1) / len as u64);
        if invert {
            w_len = inverse(w_len);
        }
        let half = len / 2;
        let mut twiddles = Vec::with_capacity(half);
        let mut w = 1u64;
        for _ in 0..half {
            twiddles.push(w);
            w = mul(w, w_len);
        }
        for chunk in data.chunks_exact_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for ((u, v), &tw) in lo.iter_mut().zip(hi.iter_mut()).zip(&twiddles) {
                let t = mul(*v, tw);
                let a = *u;
                *u = add(a, t);
                *v = sub(a, t);
            }
        }
        len <<= 1;
    }
}

fn ntt_multiply(a: &[u64], b: &[u64]) -> Vec<u64> {
    let out_len = a.len() + b.len() - 1;
    let size = out_len.next_power_of_two();
    let mut fa = vec![0u64; size];
    let mut fb = vec![0u64; size];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    transform(&mut fa, false);
    transform(&mut fb, false);
    for (x, &y) in fa.iter_mut().zip(&fb) {
        *x = mul(*x, y);
    }
    transform(&mut fa, true);
    let scale = inverse(size as u64);
    fa.truncate(out_len);
    for x in fa.iter_mut() {
        *x = mul(*x, scale);
    }
    fa
}

/// Largest transform length supported by the field.
pub(crate) const MAX_TRANSFORM_LEN: u64 = 1 << TWO_ADICITY;

/// Schoolbook product over the non-zero coefficients.
pub(crate) fn sparse_multiply(a: &[(usize, u64)], b: &[(usize, u64)], out_len: usize) -> Vec<u64> {
    let mut out = vec![0u64; out_len];
    for &(i, x) in a {
        for &(j, y) in b {
            out[i + j] += x * y;
        }
    }
    out
}

fn nonzero(v: &[u64]) -> Vec<(usize, u64)> {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}

/// Exact coefficient product of two non-negative integer polynomials.
///
/// Fails with a configuration error when a product coefficient could reach
/// the field modulus or the transform would exceed the field's 2-adic limit.
pub fn poly_multiply_counts(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    if a.is_empty() || b.is_empty() {
        return Ok(vec![]);
    }
    let out_len = a.len() + b.len() - 1;
    let max_a = a.iter().copied().max().unwrap_or(0) as u128;
    let max_b = b.iter().copied().max().unwrap_or(0) as u128;
    let worst = max_a * max_b * a.len().min(b.len()) as u128;
    if worst >= NTT_MODULUS as u128 {
        return Err(Error::Config(format!(
            "product coefficients may reach {worst}, beyond the transform modulus"
        )));
    }
    if out_len.next_power_of_two() as u64 > MAX_TRANSFORM_LEN {
        return Err(Error::Config(format!(
            "transform length {out_len} exceeds the supported 2^{TWO_ADICITY}"
        )));
    }
    let (na, nb) = (nonzero(a), nonzero(b));
    let size = out_len.next_power_of_two() as f64;
    let transform_cost = 3.0 * size * size.log2().max(1.0);
    if ((na.len() * nb.len()) as f64) < transform_cost {
        return Ok(sparse_multiply(&na, &nb, out_len));
    }
    Ok(ntt_multiply(a, b))
}

/// Transform-only product, without the sparse shortcut.
pub(crate) fn poly_multiply_transform(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    ntt_multiply(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::rng_from_seed;
    use rand::Rng;

    fn schoolbook(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn field_reduction() {
        let p = NTT_MODULUS as u128;
        for &(a, b) in &[
            (NTT_MODULUS - 1, NTT_MODULUS - 1),
            (1u64 << 63, 3),
            (EPSILON, EPSILON + 5),
            (123456789, 987654321),
        ] {
            assert_eq!(mul(a, b) as u128, (a as u128 * b as u128) % p);
        }
        assert_eq!(pow(GENERATOR, (NTT_MODULUS - 1) / 2), NTT_MODULUS - 1);
    }

    #[test]
    fn small_products() {
        assert_eq!(
            poly_multiply_counts(&[1, 1], &[1, 1]).unwrap(),
            vec![1, 2, 1]
        );
        assert_eq!(
            poly_multiply_counts(&[1, 0, 1], &[1]).unwrap(),
            vec![1, 0, 1]
        );
        assert_eq!(poly_multiply_transform(&[1, 1], &[1, 1]), vec![1, 2, 1]);
    }

    #[test]
    fn random_indicator_vectors() {
        let mut rng = rng_from_seed(5);
        for _ in 0..200 {
            let la = rng.gen_range(1..=256);
            let lb = rng.gen_range(1..=256);
            let a: Vec<u64> = (0..la).map(|_| rng.gen_range(0..2)).collect();
            let b: Vec<u64> = (0..lb).map(|_| rng.gen_range(0..2)).collect();
            let want = schoolbook(&a, &b);
            assert_eq!(poly_multiply_counts(&a, &b).unwrap(), want);
            assert_eq!(poly_multiply_transform(&a, &b), want);
        }
    }

    #[test]
    fn large_coefficients_stay_exact() {
        let a = vec![1u64 << 20; 1000];
        let b = vec![(1u64 << 20) + 3; 700];
        assert_eq!(poly_multiply_transform(&a, &b), schoolbook(&a, &b));
    }

    #[test]
    fn overflow_guard() {
        assert!(poly_multiply_counts(&[u64::MAX / 2], &[4]).is_err());
    }
}
