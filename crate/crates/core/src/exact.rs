//! Arbitrary-precision integers and rationals plus the combinatorial
//! primitives every other module consumes.
//!
//! `Rational` is kept in canonical form (positive denominator, reduced)
//! by `num-rational` after every operation, so equality checks throughout
//! the crate are bit-exact comparisons.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational in canonical form.
pub type Rational = BigRational;

/// Errors from the combinatorial primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// `binom` with a negative upper index; no formula in scope needs it.
    UnsupportedBinomialDomain { upper: i64 },
    /// `double_factorial` below the `(-1)!! = 1` convention.
    DoubleFactorialDomain { arg: i64 },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::UnsupportedBinomialDomain { upper } => {
                write!(f, "unsupported-binomial-domain: upper index {upper} is negative")
            }
            ExactError::DoubleFactorialDomain { arg } => {
                write!(f, "double factorial undefined for {arg} (must be >= -1)")
            }
        }
    }
}

impl core::error::Error for ExactError {}

/// `m!` as a big integer.
pub fn factorial(m: u64) -> Int {
    let mut acc = Int::one();
    for j in 2..=m {
        acc *= Int::from(j);
    }
    acc
}

/// Double factorial `m!!` with the conventions `(-1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<Int, ExactError> {
    if m < -1 {
        return Err(ExactError::DoubleFactorialDomain { arg: m });
    }
    let mut acc = Int::one();
    let mut j = m;
    while j >= 2 {
        acc *= Int::from(j);
        j -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient with the vanishing convention: `C(a, b) = 0`
/// whenever `b < 0` or `b > a`. A negative upper index is rejected.
pub fn binom(a: i64, b: i64) -> Result<Int, ExactError> {
    if a < 0 {
        return Err(ExactError::UnsupportedBinomialDomain { upper: a });
    }
    Ok(binom_nonneg(a as u64, b))
}

/// `C(a, b)` for `a >= 0`, zero outside `0 <= b <= a`.
pub(crate) fn binom_nonneg(a: u64, b: i64) -> Int {
    if b < 0 || (b as u64) > a {
        return Int::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..b {
        num *= Int::from(a - i);
        den *= Int::from(i + 1);
    }
    num / den
}

/// Canonical `"p/q"` rendering (plain `"p"` when the denominator is 1).
pub fn rational_string(r: &Rational) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational from an integer pair, normalizing signs.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

/// `2^k` as a big integer, `k >= 0`.
pub fn pow2(k: u64) -> Int {
    Int::one() << k as usize
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(factorial(10), Int::from(3_628_800));
    }

    #[test]
    fn double_factorial_conventions() {
        assert_eq!(double_factorial(-1).unwrap(), Int::from(1));
        assert_eq!(double_factorial(0).unwrap(), Int::from(1));
        assert_eq!(double_factorial(5).unwrap(), Int::from(15));
        assert_eq!(double_factorial(6).unwrap(), Int::from(48));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn double_factorial_pairs_with_factorial() {
        // (2m)!! * (2m-1)!! = (2m)!
        for m in 0..=30i64 {
            let lhs = double_factorial(2 * m).unwrap() * double_factorial(2 * m - 1).unwrap();
            assert_eq!(lhs, factorial(2 * m as u64));
        }
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2).unwrap(), Int::from(10));
        assert_eq!(binom(3, -1).unwrap(), Int::from(0));
        assert_eq!(binom(4, 7).unwrap(), Int::from(0));
        assert_eq!(binom(0, 0).unwrap(), Int::from(1));
        assert!(matches!(
            binom(-2, 1),
            Err(ExactError::UnsupportedBinomialDomain { upper: -2 })
        ));
    }

    #[test]
    fn binom_pascal_recurrence() {
        // C(a,b) = C(a-1,b-1) + C(a-1,b) with out-of-range terms zero.
        for a in 1..=30i64 {
            for b in 0..=a {
                let lhs = binom(a, b).unwrap();
                let rhs = binom(a - 1, b - 1).unwrap() + binom(a - 1, b).unwrap();
                assert_eq!(lhs, rhs, "pascal failed at ({a},{b})");
            }
        }
    }

    #[test]
    fn binom_symmetry_row_sum() {
        for a in 0..=20i64 {
            let row: Vec<Int> = (0..=a).map(|b| binom(a, b).unwrap()).collect();
            let sum: Int = row.iter().sum();
            assert_eq!(sum, pow2(a as u64));
            for b in 0..=a {
                assert_eq!(row[b as usize], row[(a - b) as usize]);
            }
        }
    }

    #[test]
    fn rational_strings_are_canonical() {
        assert_eq!(rational_string(&ratio(2, 4)), "1/2");
        assert_eq!(rational_string(&ratio(-2, 4)), "-1/2");
        assert_eq!(rational_string(&ratio(3, -9)), "-1/3");
        assert_eq!(rational_string(&ratio(8, 2)), "4");
    }
}
