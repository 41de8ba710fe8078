//! Generating series for symmetric products of graded Hodge data.
//!
//! The central closed form: writing `h^{p,q,k}` for the input table, the
//! series
//!
//! ```text
//! sum_n ( sum_{p,q,k} h^{p,q,k}(S^n) y^p x^q (-z)^k ) t^n
//!     = prod_{p,q,k} (1 - y^p x^q z^k t)^{(-1)^{k+1} h^{p,q,k}}
//! ```
//!
//! determines the Hodge numbers of every symmetric product at once. Setting
//! `z = 1` (and optionally `x = 1`) gives the analogous product and
//! exponential forms for E-polynomials and chi_y genera. The module also
//! contains an independent combinatorial count of invariant dimensions
//! (symmetric powers of the even part tensor exterior powers of the odd
//! part) used to cross-check the series route.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::hodge::HodgeNumbers;
use crate::ring::{
    geometric_factor, rat, rat_to_integer, Exponents, LaurentPoly, RingError, TruncSeries,
};

/// Errors from series extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacdonaldError {
    #[error(
        "coefficient of y^{p} x^{q} z^{k} t^{n} is {value}, which is not a \
         valid signed Hodge number; this indicates an internal inconsistency"
    )]
    InconsistentCoefficient {
        p: i64,
        q: i64,
        k: i64,
        n: usize,
        value: String,
    },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which closed form of a specialized series to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesForm {
    /// Product of geometric factors, one per monomial of the base
    /// polynomial.
    Product,
    /// `exp( sum_{r>=1} e(y^r, x^r) t^r / r )`.
    Exponential,
}

/// Dimensions of a triple-graded space, keyed by `(p, q, k)`; zero entries
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriGradedDims {
    dims: BTreeMap<(i64, i64, i64), u64>,
}

impl TriGradedDims {
    pub fn new(entries: impl IntoIterator<Item = ((i64, i64, i64), u64)>) -> Self {
        let mut dims = BTreeMap::new();
        for (key, d) in entries {
            if d > 0 {
                *dims.entry(key).or_insert(0) += d;
            }
        }
        TriGradedDims { dims }
    }

    /// Reads a Hodge table as plain graded dimensions.
    pub fn from_hodge(h: &HodgeNumbers) -> Self {
        TriGradedDims::new(h.iter().map(|(&key, &v)| (key, v)))
    }

    /// A singly `k`-graded space placed at `p = q = 0`.
    pub fn from_k_graded(dims: impl IntoIterator<Item = (i64, u64)>) -> Self {
        TriGradedDims::new(dims.into_iter().map(|(k, d)| ((0, 0, k), d)))
    }

    pub fn get(&self, p: i64, q: i64, k: i64) -> u64 {
        self.dims.get(&(p, q, k)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64, i64), &u64)> {
        self.dims.iter()
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Collapses to the `k`-grading (summing over `p`, `q`).
    pub fn k_dims(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(_, _, k), &d) in &self.dims {
            *out.entry(k).or_insert(0) += d;
        }
        out
    }
}

/// The master series: `t^n` coefficient `sum h^{p,q,k}(S^n) y^p x^q (-z)^k`,
/// expanded to the given order as a product of geometric factors
/// `(1 - y^p x^q z^k t)^{-(-1)^k h}`.
pub fn sym_hodge_series(h: &HodgeNumbers, order: usize) -> TruncSeries {
    let mut series = TruncSeries::one(order);
    for (&(p, q, k), &hv) in h.iter() {
        let base = LaurentPoly::term(rat(1), Exponents::new(p, q, k));
        let e = if k.rem_euclid(2) == 0 {
            hv as i64
        } else {
            -(hv as i64)
        };
        let factor = geometric_factor(&base, e, order).expect("base is a monomial");
        series = &series * &factor;
    }
    series
}

/// Hodge numbers of the `n`-th symmetric product, extracted from the master
/// series by stripping the `(-1)^k` signs.
pub fn sym_hodge_numbers(h: &HodgeNumbers, n: usize) -> Result<HodgeNumbers, MacdonaldError> {
    let series = sym_hodge_series(h, n);
    let coeff = series.coeff(n);
    let mut entries = Vec::new();
    for (&e, c) in coeff.iter() {
        let (p, q, k) = (e.y, e.x, e.z);
        let signed = if k.rem_euclid(2) == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        let value = rat_to_integer(&signed)
            .and_then(|v| i64::try_from(v).ok())
            .filter(|&v| v > 0)
            .ok_or_else(|| MacdonaldError::InconsistentCoefficient {
                p,
                q,
                k,
                n,
                value: c.to_string(),
            })?;
        entries.push(((p, q, k), value));
    }
    HodgeNumbers::new(entries).map_err(|_| MacdonaldError::InconsistentCoefficient {
        p: 0,
        q: 0,
        k: 0,
        n,
        value: "duplicate key".into(),
    })
}

/// Expands `prod (1 - monomial t)^{-coeff}` over the terms of an integer
/// Laurent polynomial (the E-polynomial or chi_y genus).
fn base_poly_series(base: &LaurentPoly, order: usize, form: SeriesForm) -> TruncSeries {
    match form {
        SeriesForm::Product => {
            let mut series = TruncSeries::one(order);
            for (&e, c) in base.iter() {
                let exponent = rat_to_integer(c)
                    .and_then(|v| i64::try_from(v).ok())
                    .expect("signed Hodge counts are integers");
                let w = LaurentPoly::term(rat(1), e);
                let factor = geometric_factor(&w, exponent, order).expect("base is a monomial");
                series = &series * &factor;
            }
            series
        }
        SeriesForm::Exponential => {
            let mut arg = TruncSeries::zero(order);
            for r in 1..=order {
                let scaled = base
                    .substitute_powers(r as i64)
                    .expect("positive substitution power")
                    .scale(&crate::ring::ratio(1, r as i64));
                // Contribute scaled * t^r.
                let mut coeffs = vec![LaurentPoly::zero(); order + 1];
                coeffs[r] = scaled;
                arg = &arg + &TruncSeries::from_coeffs(coeffs);
            }
            arg.exp().expect("constant term is zero")
        }
    }
}

/// Generating series of E-polynomials of symmetric products.
pub fn e_series(h: &HodgeNumbers, order: usize, form: SeriesForm) -> TruncSeries {
    base_poly_series(&h.e_polynomial(), order, form)
}

/// Generating series of chi_y genera of symmetric products.
pub fn chi_y_series(h: &HodgeNumbers, order: usize, form: SeriesForm) -> TruncSeries {
    base_poly_series(&h.chi_y(), order, form)
}

/// Dimensions of the invariant part of the `n`-th tensor power, counted
/// directly: multisets of basis labels from the even part (symmetric
/// powers) paired with strictly increasing tuples from the odd part
/// (exterior powers), degrees adding componentwise.
///
/// This is deliberately independent of the generating-series route so the
/// two can be checked against each other.
pub fn sym_wedge_dims(d: &TriGradedDims, n: usize) -> TriGradedDims {
    sym_wedge_dims_with_parity(d, n, false)
}

/// The same count with the roles of the parities swapped (symmetric powers
/// of the odd part, exterior powers of the even part); this counts the
/// sign-isotypic part of the tensor power.
pub fn sym_wedge_dims_sign(d: &TriGradedDims, n: usize) -> TriGradedDims {
    sym_wedge_dims_with_parity(d, n, true)
}

fn sym_wedge_dims_with_parity(d: &TriGradedDims, n: usize, swap: bool) -> TriGradedDims {
    // Expand dimensions into individual basis labels.
    let mut sym_labels: Vec<(i64, i64, i64)> = Vec::new();
    let mut wedge_labels: Vec<(i64, i64, i64)> = Vec::new();
    for (&(p, q, k), &dim) in d.iter() {
        let even = k.rem_euclid(2) == 0;
        let to_sym = even != swap;
        for _ in 0..dim {
            if to_sym {
                sym_labels.push((p, q, k));
            } else {
                wedge_labels.push((p, q, k));
            }
        }
    }
    let mut out: BTreeMap<(i64, i64, i64), u64> = BTreeMap::new();
    for n_wedge in 0..=n {
        let n_sym = n - n_wedge;
        for wedge in wedge_labels.iter().combinations(n_wedge) {
            let wedge_sum = wedge
                .iter()
                .fold((0i64, 0i64, 0i64), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
            for sym in sym_labels.iter().combinations_with_replacement(n_sym) {
                let total = sym.iter().fold(wedge_sum, |a, b| {
                    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
                });
                *out.entry(total).or_insert(0) += 1;
            }
        }
    }
    TriGradedDims { dims: out }
}
