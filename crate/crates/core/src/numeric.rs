//! Exact rational and integer values used by every admissibility decision.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatioError {
    #[error("`{0}` is not a rational of the form p or p/q")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `0 < self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.0.is_positive() && self.0 <= BigRational::one()
    }

    /// The exact square root, when `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<ExactRatio> {
        if self.0.is_negative() {
            return None;
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        (&n * &n == *self.0.numer() && &d * &d == *self.0.denom())
            .then(|| ExactRatio(BigRational::new(n, d)))
    }

    /// `⌊self⌋` for nonnegative values.
    pub fn floor_u64(&self) -> Option<u64> {
        self.0.floor().to_integer().to_u64()
    }

    /// Lossy value for display columns only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for ExactRatio {
    fn from(r: BigRational) -> Self {
        ExactRatio(r)
    }
}

impl From<u64> for ExactRatio {
    fn from(n: u64) -> Self {
        ExactRatio::from_integer(n)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRatio {
    type Err = ParseRatioError;

    /// Parses `p` or `p/q` with optional sign on `p`; no whitespace or
    /// decimal points.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || ParseRatioError::Malformed(s.to_string());
        let digits = |t: &str, signed: bool| -> Result<BigInt, ParseRatioError> {
            let body = if signed {
                t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t)
            } else {
                t
            };
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            t.parse::<BigInt>().map_err(|_| malformed())
        };
        let (numer, denom) = match s.split_once('/') {
            Some((p, q)) => (digits(p, true)?, digits(q, false)?),
            None => (digits(s, true)?, BigInt::one()),
        };
        if denom.is_zero() {
            return Err(ParseRatioError::ZeroDenominator(s.to_string()));
        }
        Ok(ExactRatio::new(numer, denom))
    }
}

/// An arbitrary-precision nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// `base^exp` with `0^0 = 1`.
    pub fn pow(base: u64, exp: u64) -> Self {
        let mut acc = BigUint::one();
        let b = BigUint::from(base);
        for _ in 0..exp {
            acc *= &b;
        }
        BigCount(acc)
    }

    /// Binomial coefficient `C(n, k)`.
    pub fn binomial(n: u64, k: u64) -> Self {
        if k > n {
            return BigCount::zero();
        }
        let k = k.min(n - k);
        let mut acc = BigUint::one();
        for i in 0..k {
            acc *= n - i;
            acc /= i + 1;
        }
        BigCount(acc)
    }

    pub fn checked_sub(&self, other: &BigCount) -> Option<BigCount> {
        (self.0 >= other.0).then(|| BigCount(&self.0 - &other.0))
    }
}

impl From<u64> for BigCount {
    fn from(n: u64) -> Self {
        BigCount(BigUint::from(n))
    }
}

impl From<u128> for BigCount {
    fn from(n: u128) -> Self {
        BigCount(BigUint::from(n))
    }
}

impl From<BigUint> for BigCount {
    fn from(n: BigUint) -> Self {
        BigCount(n)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::ops::Add<&BigCount> for &BigCount {
    type Output = BigCount;

    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul<&BigCount> for &BigCount {
    type Output = BigCount;

    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        BigCount(iter.map(|c| c.0).sum())
    }
}

impl std::iter::Product for BigCount {
    fn product<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        BigCount(iter.map(|c| c.0).product())
    }
}

/// Exact `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    Roots::sqrt(&n)
}

/// `Some(r)` when `n = r²`.
pub fn exact_sqrt(n: u128) -> Option<u128> {
    let r = Roots::sqrt(&n);
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let r: ExactRatio = "4/6".parse().unwrap();
        assert_eq!(r, ExactRatio::new(2, 3));
        assert_eq!(r.to_string(), "2/3");
        assert_eq!("7".parse::<ExactRatio>().unwrap().to_string(), "7");
        assert_eq!("-3/9".parse::<ExactRatio>().unwrap().to_string(), "-1/3");
        assert!("1.5".parse::<ExactRatio>().is_err());
        assert!("1/-2".parse::<ExactRatio>().is_err());
        assert!(" 1/2".parse::<ExactRatio>().is_err());
        assert_eq!(
            "1/0".parse::<ExactRatio>().unwrap_err(),
            ParseRatioError::ZeroDenominator("1/0".into())
        );
    }

    #[test]
    fn unit_interval() {
        assert!(ExactRatio::one().in_unit_interval());
        assert!(ExactRatio::new(1, 1000).in_unit_interval());
        assert!(!ExactRatio::zero().in_unit_interval());
        assert!(!ExactRatio::new(3, 2).in_unit_interval());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(ExactRatio::new(289, 9).sqrt_exact(), Some(ExactRatio::new(17, 3)));
        assert_eq!(ExactRatio::new(313, 9).sqrt_exact(), None);
        assert_eq!(ExactRatio::new(-4, 1).sqrt_exact(), None);
        assert_eq!(exact_sqrt(10u128.pow(16)), Some(10u128.pow(8)));
        assert_eq!(exact_sqrt(10u128.pow(16) + 1), None);
        assert_eq!(isqrt(99), 9);
    }

    #[test]
    fn counts() {
        assert_eq!(BigCount::binomial(7, 5), BigCount::from(21u64));
        assert_eq!(BigCount::binomial(3, 5), BigCount::zero());
        assert_eq!(BigCount::pow(0, 0), BigCount::one());
        assert_eq!(BigCount::pow(0, 3), BigCount::zero());
        assert_eq!(BigCount::pow(3, 2), BigCount::from(9u64));
        assert_eq!(BigCount::from(3u64).checked_sub(&BigCount::from(4u64)), None);
        let s: BigCount = [1u64, 2, 3].into_iter().map(BigCount::from).sum();
        assert_eq!(s.to_string(), "6");
    }
}
