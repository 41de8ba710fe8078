//! Exact coefficient arithmetic: rationals, sparse Laurent polynomials in
//! `y`, `x`, `z`, and truncated power series in `t` over those polynomials.
//!
//! Everything here is exact; no floating point is used anywhere.

mod laurent;
mod series;

pub use laurent::{Exponents, LaurentPoly, Var};
pub use series::{geometric_factor, TruncSeries};

use num::{BigInt, BigRational};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `v^e` for a (possibly negative) integer exponent.
///
/// Panics if `v == 0` and `e < 0`; callers that substitute user-supplied
/// values check for that case first.
pub fn rat_pow(v: &Rat, e: i64) -> Rat {
    if e == 0 {
        return rat(1);
    }
    let abs: u32 = e.unsigned_abs().try_into().expect("exponent out of range");
    let powered = Rat::new(v.numer().pow(abs), v.denom().pow(abs));
    if e < 0 {
        powered.recip()
    } else {
        powered
    }
}

/// Extracts an integer from a rational that is known to be integral.
pub fn rat_to_integer(v: &Rat) -> Option<BigInt> {
    if v.is_integer() {
        Some(v.to_integer())
    } else {
        None
    }
}

/// Errors raised by polynomial and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("substitution power must be positive, got {0}")]
    NonPositivePower(i64),
    #[error("cannot evaluate at {var} = 0: the variable occurs with a negative exponent")]
    ZeroAtNegativeExponent { var: Var },
    #[error("geometric factor base must be a single nonzero monomial")]
    NotAMonomial,
    #[error("series exponential requires a zero constant term")]
    ConstantTermNotZero,
    #[error("operation requires a series with constant term 1")]
    ConstantTermNotOne,
}
