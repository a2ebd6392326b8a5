//! Exact scalar arithmetic.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Its canonical text form is `n` when the denominator
//! is one and `n/d` otherwise, with the sign carried by the numerator.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use thiserror::Error;

/// Exact rational number.
pub type Rational = BigRational;

/// Coefficient types usable by the generic polynomial and recurrence kernels.
///
/// Anything that behaves like a field element works: [`Rational`] for exact
/// results, `f64` for quick numeric previews.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("malformed rational `{0}`: expected `-?digits` or `-?digits/digits`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("inversion of zero")]
    InverseOfZero,
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `-?digits` or `-?digits/digits` into a normalized rational.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let t = text.trim();
    let body = t.strip_prefix('-').unwrap_or(t);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !is_digits(num) || !den.map_or(true, is_digits) {
        return Err(ArithError::Malformed(text.to_string()));
    }
    let mut n: BigInt = num.parse().map_err(|_| ArithError::Malformed(text.to_string()))?;
    if t.starts_with('-') {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ArithError::Malformed(text.to_string()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ArithError::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Parses a comma-separated list of rationals, e.g. `-1,-1,1`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ArithError> {
    text.split(',').map(parse_rational).collect()
}

pub fn checked_inverse(a: &Rational) -> Result<Rational, ArithError> {
    if a.is_zero() {
        Err(ArithError::InverseOfZero)
    } else {
        Ok(a.recip())
    }
}

/// Lowest terms with a positive denominator.
pub fn is_normalized(a: &Rational) -> bool {
    a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
}

pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
