//! Exact arbitrary-precision arithmetic: rationals, Laurent polynomials in a
//! single variable, bivariate polynomials and rational functions in `(q, t)`,
//! and truncated series expansion in `t`.
//!
//! No floating point is used anywhere in this module.

mod bivariate;
mod laurent;
mod ratfun;
mod series;

pub use bivariate::BivariatePoly;
pub use laurent::LaurentPoly;
pub use num::BigInt;
pub use num::BigRational;
pub use ratfun::RationalFunctionQT;
pub use series::TruncatedSeries;

use std::fmt;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Exact integer power of a rational, with negative exponents allowed for
/// nonzero bases.
pub fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    use num::{One, Zero};
    if exp == 0 {
        return BigRational::one();
    }
    assert!(!base.is_zero() || exp > 0, "zero base with negative exponent");
    let mut e = exp.unsigned_abs();
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// Evaluation hit a zero of the denominator.
    PoleAtPoint,
    /// A series expansion in `t` was requested but the denominator has no
    /// invertible constant term in `t`.
    NotExpandable(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroDenominator => write!(f, "zero denominator"),
            ExactError::PoleAtPoint => write!(f, "pole at evaluation point"),
            ExactError::NotExpandable(why) => write!(f, "not expandable: {why}"),
        }
    }
}

impl std::error::Error for ExactError {}
