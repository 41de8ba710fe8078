//! Power series in `t`, truncated at a fixed order, with Laurent-polynomial
//! coefficients.
//!
//! A series of order `N` stores the coefficients of `t^0 .. t^N`; every
//! operation truncates back to the smaller order of its operands, so working
//! to order `N` is exact modulo `t^{N+1}`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::traits::Zero;

use super::{rat, ratio, Exponents, LaurentPoly, Rat, RingError};

/// A truncated power series `c_0 + c_1 t + ... + c_N t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncSeries {
    /// The zero series truncated at `t^order`.
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// The series whose only term is `t`.
    pub fn t(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = LaurentPoly::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least t^0");
        TruncSeries { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Drops coefficients above `order` (or keeps the series as-is when it
    /// is already short enough).
    pub fn truncated(&self, order: usize) -> TruncSeries {
        let n = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Multiplies every coefficient by the rational `c`.
    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale_poly(&self, p: &LaurentPoly) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Applies `LaurentPoly::evaluate` to every coefficient.
    pub fn evaluate(&self, assignment: &[(super::Var, Rat)]) -> Result<TruncSeries, RingError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.evaluate(assignment))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncSeries { coeffs })
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<TruncSeries, RingError> {
        if !self.coeffs[0].is_zero() {
            return Err(RingError::ConstantTermNotZero);
        }
        let order = self.order();
        let mut result = TruncSeries::one(order);
        let mut term = TruncSeries::one(order);
        // term after k steps is self^k / k!.
        for k in 1..=order {
            term = (&term * self).scale(&ratio(1, k as i64));
            result = &result + &term;
        }
        Ok(result)
    }

    /// `log` of a series with constant term 1.
    pub fn log(&self) -> Result<TruncSeries, RingError> {
        if !self.coeffs[0].is_one() {
            return Err(RingError::ConstantTermNotOne);
        }
        let order = self.order();
        let u = self - &TruncSeries::one(order);
        let mut result = TruncSeries::zero(order);
        let mut power = TruncSeries::one(order);
        // log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k.
        for k in 1..=order {
            power = &power * &u;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = &result + &power.scale(&ratio(sign, k as i64));
        }
        Ok(result)
    }

    /// Integer power of a series with constant term 1; negative exponents go
    /// through the series inverse.
    pub fn pow_int(&self, e: i64) -> Result<TruncSeries, RingError> {
        if !self.coeffs[0].is_one() {
            return Err(RingError::ConstantTermNotOne);
        }
        let base = if e < 0 { self.invert_unit() } else { self.clone() };
        let mut result = TruncSeries::one(self.order());
        let mut square = base;
        let mut remaining = e.unsigned_abs();
        while remaining > 0 {
            if remaining & 1 == 1 {
                result = &result * &square;
            }
            remaining >>= 1;
            if remaining > 0 {
                square = &square * &square;
            }
        }
        Ok(result)
    }

    /// Multiplicative inverse, assuming constant term 1.
    fn invert_unit(&self) -> TruncSeries {
        let order = self.order();
        let mut inv = TruncSeries::zero(order);
        inv.coeffs[0] = LaurentPoly::one();
        for n in 1..=order {
            // b_n = -sum_{k=1..n} a_k b_{n-k}
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &inv.coeffs[n - k]);
            }
            inv.coeffs[n] = -&acc;
        }
        inv
    }

    /// Renders `n: coefficient` lines, one per stored order.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n}: {c}\n"));
        }
        out
    }
}

/// The expansion of `(1 - w t)^{-e}` to the given order, where `w` is a
/// single monomial and `e` any integer.
///
/// The coefficient of `t^n` is `binom(e + n - 1, n) * w^n`, computed by the
/// recurrence `c_n = c_{n-1} (e + n - 1) / n`, which is exact for negative
/// `e` as well (the series terminates there, e.g. `e = -1` gives `1 - w t`).
pub fn geometric_factor(w: &LaurentPoly, e: i64, order: usize) -> Result<TruncSeries, RingError> {
    let (w_exp, w_coeff) = w.as_monomial().ok_or(RingError::NotAMonomial)?;
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    coeffs[0] = LaurentPoly::one();
    let mut c = rat(1);
    let mut pow_exp = Exponents::default();
    let mut pow_coeff = rat(1);
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        c *= ratio(e + n as i64 - 1, n as i64);
        if c.is_zero() {
            break;
        }
        pow_exp = pow_exp.plus(w_exp);
        pow_coeff *= w_coeff;
        *slot = LaurentPoly::term(&c * &pow_coeff, pow_exp);
    }
    Ok(TruncSeries::from_coeffs(coeffs))
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<(bool, String)> = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t_part = match n {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            if n == 0 {
                pieces.push((false, c.to_string()));
            } else if let Some((e, coeff)) = c.as_monomial() {
                // Single-term coefficients are written inline, with the sign
                // hoisted out: `- y*x*t^2` rather than `+ (-y*x)*t^2`.
                let negative = coeff < &Rat::zero();
                let abs = if negative { -coeff.clone() } else { coeff.clone() };
                let body = LaurentPoly::term(abs, e);
                if body.is_one() {
                    pieces.push((negative, t_part));
                } else {
                    pieces.push((negative, format!("{body}*{t_part}")));
                }
            } else {
                pieces.push((false, format!("({c})*{t_part}")));
            }
        }
        if pieces.is_empty() {
            return write!(f, "0");
        }
        for (i, (negative, body)) in pieces.iter().enumerate() {
            if i == 0 {
                if *negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if *negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        TruncSeries { coeffs }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        TruncSeries { coeffs }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        TruncSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Var;
    use super::*;

    /// `sum_{r=1..N} t^r / r`, the log of the plain geometric series.
    fn harmonic_sum(order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        for r in 1..=order {
            s.coeffs[r] = LaurentPoly::constant(ratio(1, r as i64));
        }
        s
    }

    #[test]
    fn exp_of_harmonic_sum_is_geometric_series() {
        let s = harmonic_sum(4).exp().unwrap();
        let expected = geometric_factor(&LaurentPoly::one(), 1, 4).unwrap();
        assert_eq!(s, expected);
        for n in 0..=4 {
            assert!(expected.coeff(n).is_one());
        }
    }

    #[test]
    fn log_of_one_minus_t() {
        let one_minus_t = geometric_factor(&LaurentPoly::one(), -1, 3).unwrap();
        let l = one_minus_t.log().unwrap();
        assert!(l.coeff(0).is_zero());
        assert_eq!(l.coeff(1), &LaurentPoly::constant(rat(-1)));
        assert_eq!(l.coeff(2), &LaurentPoly::constant(ratio(-1, 2)));
        assert_eq!(l.coeff(3), &LaurentPoly::constant(ratio(-1, 3)));
    }

    #[test]
    fn log_then_exp_round_trips() {
        // (1 - t)^{-2} has constant term 1; exp(log(s)) = s.
        let s = geometric_factor(&LaurentPoly::one(), 2, 5).unwrap();
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn geometric_factor_with_monomial_base() {
        // (1 - x t)^{-2} = 1 + 2x t + 3x^2 t^2 + ...
        let x = LaurentPoly::variable(Var::X);
        let s = geometric_factor(&x, 2, 2).unwrap();
        assert_eq!(s.coeff(0), &LaurentPoly::one());
        assert_eq!(
            s.coeff(1),
            &LaurentPoly::term(rat(2), Exponents::new(0, 1, 0))
        );
        assert_eq!(
            s.coeff(2),
            &LaurentPoly::term(rat(3), Exponents::new(0, 2, 0))
        );
    }

    #[test]
    fn geometric_factor_negative_exponent_terminates() {
        // e = -1 gives the polynomial 1 - w t.
        let w = LaurentPoly::term(rat(1), Exponents::new(1, 1, 2));
        let s = geometric_factor(&w, -1, 4).unwrap();
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(1), &LaurentPoly::term(rat(-1), Exponents::new(1, 1, 2)));
        for n in 2..=4 {
            assert!(s.coeff(n).is_zero());
        }
    }

    #[test]
    fn geometric_factor_rejects_non_monomials() {
        let p = &LaurentPoly::one() + &LaurentPoly::variable(Var::Y);
        assert_eq!(
            geometric_factor(&p, 1, 2).unwrap_err(),
            RingError::NotAMonomial
        );
        assert_eq!(
            geometric_factor(&LaurentPoly::zero(), 1, 2).unwrap_err(),
            RingError::NotAMonomial
        );
    }

    #[test]
    fn pow_int_matches_repeated_multiplication_and_inverts() {
        let s = geometric_factor(&LaurentPoly::variable(Var::Y), 3, 6).unwrap();
        let cubed = s.pow_int(3).unwrap();
        assert_eq!(cubed, &(&s * &s) * &s);
        let id = &cubed * &cubed.pow_int(-1).unwrap();
        assert_eq!(id, TruncSeries::one(6));
        assert_eq!(s.pow_int(0).unwrap(), TruncSeries::one(6));
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        assert_eq!(
            TruncSeries::one(2).exp().unwrap_err(),
            RingError::ConstantTermNotZero
        );
        assert_eq!(
            TruncSeries::zero(2).log().unwrap_err(),
            RingError::ConstantTermNotOne
        );
    }

    #[test]
    fn display_inlines_monomial_coefficients() {
        // 1 - y*x*t^2 over order 2.
        let mut s = TruncSeries::one(2);
        s.coeffs[2] = LaurentPoly::term(
            rat(-1),
            Exponents::new(1, 1, 0),
        );
        assert_eq!(s.to_string(), "1 - y*x*t^2");
        let mut multi = TruncSeries::one(1);
        multi.coeffs[1] = &LaurentPoly::one() + &LaurentPoly::variable(Var::Y);
        assert_eq!(multi.to_string(), "1 + (1 + y)*t");
    }
}
