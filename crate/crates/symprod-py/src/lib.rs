//! Python bindings for the main `symprod` types and operations.
//!
//! Built as an extension module named `symprod_py`; see
//! `python/smoke_test.py` at the repository root for a usage tour.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use symprod::hodge::HodgeNumbers;
use symprod::macdonald::{self, SeriesForm};
use symprod::oracle::DEFAULT_DIM_BOUND;
use symprod::pairing::{series_int_coeffs, GradedPairing};
use symprod::verify::{run_suite, Suite, VerifyConfig};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_form(form: &str) -> PyResult<SeriesForm> {
    match form {
        "product" => Ok(SeriesForm::Product),
        "exponential" => Ok(SeriesForm::Exponential),
        other => Err(value_err(format!(
            "unknown series form {other:?}; expected \"product\" or \"exponential\""
        ))),
    }
}

/// A table of refined Hodge numbers `h^{p,q,k}`.
#[pyclass(name = "HodgeNumbers", module = "symprod_py")]
struct PyHodgeNumbers {
    inner: HodgeNumbers,
}

#[pymethods]
impl PyHodgeNumbers {
    /// Builds a table from `[((p, q, k), h), ...]` entries.
    #[new]
    fn new(entries: Vec<((i64, i64, i64), i64)>) -> PyResult<Self> {
        Ok(PyHodgeNumbers {
            inner: HodgeNumbers::new(entries).map_err(value_err)?,
        })
    }

    /// Parses the JSON document format used by the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyHodgeNumbers {
            inner: HodgeNumbers::from_json_str(text).map_err(value_err)?,
        })
    }

    /// The `h^{0,0,0} = h^{1,1,2} = 1` example.
    #[staticmethod]
    fn projective_line() -> Self {
        PyHodgeNumbers {
            inner: symprod::hodge::projective_line(),
        }
    }

    /// `h^{p,p,2p} = 1` for `0 <= p <= m`.
    #[staticmethod]
    fn projective_space(m: i64) -> Self {
        PyHodgeNumbers {
            inner: symprod::hodge::projective_space(m),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    /// The entries as `[((p, q, k), h), ...]`, sorted.
    fn entries(&self) -> Vec<((i64, i64, i64), u64)> {
        self.inner.iter().map(|(&key, &h)| (key, h)).collect()
    }

    fn total_dim(&self) -> u64 {
        self.inner.total_dim()
    }

    /// The E-polynomial, rendered canonically.
    fn e_polynomial(&self) -> String {
        self.inner.e_polynomial().to_string()
    }

    /// The genus polynomial in `y`, rendered canonically.
    fn chi_y(&self) -> String {
        self.inner.chi_y().to_string()
    }

    /// Refined Hodge numbers of the `n`-th symmetric product.
    fn sym_hodge(&self, n: usize) -> PyResult<PyHodgeNumbers> {
        Ok(PyHodgeNumbers {
            inner: macdonald::sym_hodge_numbers(&self.inner, n).map_err(value_err)?,
        })
    }

    /// Coefficients of the master series up to `t^max_n`, rendered
    /// canonically, one string per power of `t`.
    fn sym_series(&self, max_n: usize) -> Vec<String> {
        macdonald::sym_hodge_series(&self.inner, max_n)
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    /// Coefficients of the E-polynomial series up to `t^max_n`.
    #[pyo3(signature = (max_n, form = "product"))]
    fn e_series(&self, max_n: usize, form: &str) -> PyResult<Vec<String>> {
        let form = parse_form(form)?;
        Ok(macdonald::e_series(&self.inner, max_n, form)
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect())
    }

    /// Coefficients of the genus series up to `t^max_n`.
    #[pyo3(signature = (max_n, form = "product"))]
    fn chi_y_series(&self, max_n: usize, form: &str) -> PyResult<Vec<String>> {
        let form = parse_form(form)?;
        Ok(macdonald::chi_y_series(&self.inner, max_n, form)
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("HodgeNumbers({:?})", self.entries())
    }
}

/// A graded-symmetric pairing given by blocks `B_i` against degree `-i`.
#[pyclass(name = "GradedPairing", module = "symprod_py")]
struct PyGradedPairing {
    inner: GradedPairing,
}

#[pymethods]
impl PyGradedPairing {
    /// Parses the JSON document format used by the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGradedPairing {
            inner: GradedPairing::from_json_str(text).map_err(value_err)?,
        })
    }

    /// The `1 - t^2` fixture: identity pairing between degrees 1 and -1.
    #[staticmethod]
    fn odd_pair() -> Self {
        PyGradedPairing {
            inner: symprod::pairing::odd_pair(),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    fn dims(&self) -> BTreeMap<i64, usize> {
        self.inner.dims().clone()
    }

    fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    /// `(rho, sigma, chi)`: ranks by degree, the signature of the degree-0
    /// block, and the signed rank sum.
    fn invariants(&self) -> (BTreeMap<i64, usize>, i64, i64) {
        let inv = self.inner.invariants();
        (inv.rho, inv.sigma, inv.chi)
    }

    /// Signatures of the induced pairings on symmetric products, from the
    /// closed form, as integers for `n = 0..=max_n`.
    fn signature_series(&self, max_n: usize) -> PyResult<Vec<i64>> {
        let series = self.inner.hz_series(max_n).map_err(value_err)?;
        Ok(series_int_coeffs(&series))
    }

    /// The same signature computed brute-force from the induced pairing on
    /// invariant tensors.
    #[pyo3(signature = (n, dim_bound = DEFAULT_DIM_BOUND))]
    fn brute_signature(&self, n: usize, dim_bound: usize) -> PyResult<i64> {
        self.inner.brute_signature(n, dim_bound).map_err(value_err)
    }

    /// Orthogonal direct sum.
    fn direct_sum(&self, other: &PyGradedPairing) -> PyGradedPairing {
        PyGradedPairing {
            inner: self.inner.direct_sum(&other.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("GradedPairing(dims={:?})", self.inner.dims())
    }
}

/// Runs a verification suite; returns `(name, cases, passed, counterexample)`
/// per check. Suites: signs, kunneth, dimensions, signature, all.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0, max_n = 4, dim_bound = DEFAULT_DIM_BOUND))]
fn verify_suite(
    suite: &str,
    seed: u64,
    max_n: usize,
    dim_bound: usize,
) -> PyResult<Vec<(String, u64, bool, Option<String>)>> {
    let suite = Suite::parse(suite)
        .ok_or_else(|| value_err(format!("unknown suite {suite:?}")))?;
    let config = VerifyConfig {
        max_n,
        seed,
        dim_bound,
    };
    Ok(run_suite(suite, config)
        .into_iter()
        .map(|r| (r.name.to_string(), r.cases, r.failure.is_none(), r.failure))
        .collect())
}

#[pymodule]
fn symprod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHodgeNumbers>()?;
    m.add_class::<PyGradedPairing>()?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
