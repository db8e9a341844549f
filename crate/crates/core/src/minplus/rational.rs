use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational `num / den` with `den > 0`, kept in lowest terms.
///
/// Values of hull interpolations have denominators bounded by the array
/// length, so 128-bit arithmetic covers the common case. Comparisons that
/// would overflow fall back to big integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Rational {
            num: v as i128,
            den: 1,
        }
    }

    pub fn numer(self) -> i128 {
        self.num
    }

    pub fn denom(self) -> i128 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn floor(self) -> i128 {
        self.num.div_euclid(self.den)
    }

    fn checked_add(self, rhs: Rational) -> Option<Rational> {
        let g = gcd(self.den, rhs.den);
        let l = (self.den / g).checked_mul(rhs.den)?;
        let a = self.num.checked_mul(l / self.den)?;
        let b = rhs.num.checked_mul(l / rhs.den)?;
        Some(Rational::new(a.checked_add(b)?, l))
    }

    pub(crate) fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Sign of `terms[0] + terms[1] + ...`, exact.
pub(crate) fn sum_cmp_zero(terms: &[Rational]) -> Ordering {
    let fast = terms
        .iter()
        .try_fold(Rational::ZERO, |acc, &t| acc.checked_add(t));
    match fast {
        Some(total) => total.num.cmp(&0),
        None => {
            let total: BigRational = terms.iter().map(|t| t.to_big()).sum();
            total.cmp(&BigRational::from_integer(BigInt::from(0)))
        }
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(rhs)
            .expect("rational overflow beyond the coordinate cap")
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises() {
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
        assert_eq!(Rational::new(0, 5), Rational::ZERO);
        assert_eq!(Rational::new(7, 2).floor(), 3);
        assert_eq!(Rational::new(-7, 2).floor(), -4);
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(a + b, Rational::new(1, 2));
        assert_eq!(a - b, b);
        assert!(b < a);
        assert!(Rational::from_int(-1) < Rational::new(-1, 2));
    }

    #[test]
    fn big_fallback() {
        let huge = Rational::new(i128::MAX / 3, 1);
        let tiny = Rational::new(1, (1i128 << 100) + 1);
        assert!(tiny < huge);
        assert_eq!(
            sum_cmp_zero(&[huge, huge, huge, -huge, -huge, -huge]),
            Ordering::Equal
        );
        assert_eq!(sum_cmp_zero(&[huge, tiny, -huge]), Ordering::Greater);
    }
}
