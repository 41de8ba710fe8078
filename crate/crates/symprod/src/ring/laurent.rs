//! Sparse Laurent polynomials in the three fixed variables `y`, `x`, `z`
//! with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by the exponent triple
//! `(e_y, e_x, e_z)`, so iteration and rendering follow the lexicographic
//! order of exponents. Zero coefficients are never stored; the zero
//! polynomial is the empty map, which makes structural equality coincide
//! with mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Zero};

use super::{rat, rat_pow, Rat, RingError};

/// One of the three polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Y,
    X,
    Z,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::Y => 'y',
            Var::X => 'x',
            Var::Z => 'z',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent triple `(e_y, e_x, e_z)`. The derived `Ord` is the
/// lexicographic order used for canonical term ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents {
    pub y: i64,
    pub x: i64,
    pub z: i64,
}

impl Exponents {
    pub fn new(y: i64, x: i64, z: i64) -> Self {
        Exponents { y, x, z }
    }

    /// Componentwise sum; exponent overflow is a hard error rather than a
    /// silent wrap.
    pub fn plus(self, other: Self) -> Self {
        Exponents {
            y: self.y.checked_add(other.y).expect("exponent overflow"),
            x: self.x.checked_add(other.x).expect("exponent overflow"),
            z: self.z.checked_add(other.z).expect("exponent overflow"),
        }
    }

    /// All three exponents multiplied by `r`.
    pub fn scaled(self, r: i64) -> Self {
        Exponents {
            y: self.y.checked_mul(r).expect("exponent overflow"),
            x: self.x.checked_mul(r).expect("exponent overflow"),
            z: self.z.checked_mul(r).expect("exponent overflow"),
        }
    }

    pub fn get(self, var: Var) -> i64 {
        match var {
            Var::Y => self.y,
            Var::X => self.x,
            Var::Z => self.z,
        }
    }

    fn cleared(self, var: Var) -> Self {
        let mut e = self;
        match var {
            Var::Y => e.y = 0,
            Var::X => e.x = 0,
            Var::Z => e.z = 0,
        }
        e
    }

    pub fn is_constant(self) -> bool {
        self == Exponents::default()
    }
}

/// A sparse Laurent polynomial in `y`, `x`, `z` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        LaurentPoly::term(c, Exponents::default())
    }

    /// The single-term polynomial `c * y^e_y x^e_x z^e_z`; a zero
    /// coefficient yields the zero polynomial.
    pub fn term(c: Rat, e: Exponents) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(e, c);
        p
    }

    /// The bare variable `v`.
    pub fn variable(v: Var) -> Self {
        let e = match v {
            Var::Y => Exponents::new(1, 0, 0),
            Var::X => Exponents::new(0, 1, 0),
            Var::Z => Exponents::new(0, 0, 1),
        };
        LaurentPoly::term(rat(1), e)
    }

    /// Adds `c * monomial(e)` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponents::default())
                .is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent triple (zero if absent).
    pub fn coeff(&self, e: Exponents) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.coeff(Exponents::default())
    }

    /// `Some((exponents, coefficient))` when the polynomial has exactly one
    /// term.
    pub fn as_monomial(&self) -> Option<(Exponents, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Terms in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    /// Substitutes `y -> y^r`, `x -> x^r`, `z -> z^r` for a positive `r`.
    pub fn substitute_powers(&self, r: i64) -> Result<LaurentPoly, RingError> {
        if r <= 0 {
            return Err(RingError::NonPositivePower(r));
        }
        let mut out = LaurentPoly::default();
        for (e, c) in &self.terms {
            out.add_term(e.scaled(r), c.clone());
        }
        Ok(out)
    }

    /// Evaluates the listed variables at rational values, leaving the rest
    /// symbolic. Substituting `0` for a variable that occurs with a negative
    /// exponent is an error.
    pub fn evaluate(&self, assignment: &[(Var, Rat)]) -> Result<LaurentPoly, RingError> {
        let values: BTreeMap<Var, Rat> = assignment.iter().cloned().collect();
        let mut out = LaurentPoly::default();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = *e;
            for (var, value) in &values {
                let exp = exps.get(*var);
                if exp == 0 {
                    continue;
                }
                if value.is_zero() {
                    if exp < 0 {
                        return Err(RingError::ZeroAtNegativeExponent { var: *var });
                    }
                    coeff = Rat::zero();
                } else {
                    coeff *= rat_pow(value, exp);
                }
                exps = exps.cleared(*var);
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::default();
        for (e, coeff) in &self.terms {
            out.terms.insert(*e, coeff * c);
        }
        out
    }

    /// Renders one term, without any leading sign; the caller has already
    /// taken `|coeff|`.
    fn render_term(coeff_abs: &Rat, e: Exponents) -> String {
        let mut monos: Vec<String> = Vec::new();
        for var in [Var::Y, Var::X, Var::Z] {
            let exp = e.get(var);
            if exp == 1 {
                monos.push(var.symbol().to_string());
            } else if exp != 0 {
                monos.push(format!("{}^{}", var.symbol(), exp));
            }
        }
        if monos.is_empty() {
            return coeff_abs.to_string();
        }
        let mono = monos.join("*");
        if coeff_abs.is_one() {
            mono
        } else {
            format!("{coeff_abs}*{mono}")
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let negative = c < &Rat::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            let body = LaurentPoly::render_term(&abs, *e);
            if first {
                if negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(*eb), ca * cb);
            }
        }
        out
    }
}
