//! Finite tables of Hodge numbers `h^{p,q,k}` and the polynomials attached
//! to them.
//!
//! A table stores strictly positive integers keyed by `(p, q, k)`; `p` and
//! `q` are the bigrading, `k` the cohomological degree (which drives the
//! `(-1)^k` signs below). The JSON exchange format is
//!
//! ```json
//! {"entries": [{"p": 0, "q": 0, "k": 0, "h": 1}, ...]}
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{rat, Exponents, LaurentPoly};

/// Errors from building or parsing a Hodge-number table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("duplicate entry for (p, q, k) = ({p}, {q}, {k})")]
    Duplicate { p: i64, q: i64, k: i64 },
    #[error("h must be a positive integer, got {h} at (p, q, k) = ({p}, {q}, {k})")]
    NonPositive { p: i64, q: i64, k: i64, h: i64 },
}

/// A finite collection of Hodge numbers, canonically ordered by `(p, q, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HodgeNumbers {
    entries: BTreeMap<(i64, i64, i64), u64>,
}

#[derive(Serialize, Deserialize)]
struct HodgeDoc {
    entries: Vec<HodgeEntry>,
}

#[derive(Serialize, Deserialize)]
struct HodgeEntry {
    p: i64,
    q: i64,
    k: i64,
    h: i64,
}

impl HodgeNumbers {
    /// Builds a table, rejecting duplicate keys and non-positive values.
    pub fn new(
        entries: impl IntoIterator<Item = ((i64, i64, i64), i64)>,
    ) -> Result<Self, HodgeError> {
        let mut map = BTreeMap::new();
        for ((p, q, k), h) in entries {
            if h <= 0 {
                return Err(HodgeError::NonPositive { p, q, k, h });
            }
            if map.insert((p, q, k), h as u64).is_some() {
                return Err(HodgeError::Duplicate { p, q, k });
            }
        }
        Ok(HodgeNumbers { entries: map })
    }

    pub fn from_json_str(text: &str) -> Result<Self, HodgeError> {
        let doc: HodgeDoc =
            serde_json::from_str(text).map_err(|e| HodgeError::Json(e.to_string()))?;
        HodgeNumbers::new(doc.entries.into_iter().map(|e| ((e.p, e.q, e.k), e.h)))
    }

    pub fn to_json_string(&self) -> String {
        let doc = HodgeDoc {
            entries: self
                .entries
                .iter()
                .map(|(&(p, q, k), &h)| HodgeEntry { p, q, k, h: h as i64 })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: i64, q: i64, k: i64) -> u64 {
        self.entries.get(&(p, q, k)).copied().unwrap_or(0)
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64, i64), &u64)> {
        self.entries.iter()
    }

    /// Total dimension `sum h^{p,q,k}`.
    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The E-polynomial `sum (-1)^k h^{p,q,k} y^p x^q`.
    pub fn e_polynomial(&self) -> LaurentPoly {
        let mut e = LaurentPoly::zero();
        for (&(p, q, k), &h) in &self.entries {
            let signed = if k.rem_euclid(2) == 0 {
                h as i64
            } else {
                -(h as i64)
            };
            e.add_term(Exponents::new(p, q, 0), rat(signed));
        }
        e
    }

    /// The chi_y genus `sum (-1)^k h^{p,q,k} y^p`, i.e. the E-polynomial at
    /// `x = 1`.
    pub fn chi_y(&self) -> LaurentPoly {
        let mut c = LaurentPoly::zero();
        for (&(p, _, k), &h) in &self.entries {
            let signed = if k.rem_euclid(2) == 0 {
                h as i64
            } else {
                -(h as i64)
            };
            c.add_term(Exponents::new(p, 0, 0), rat(signed));
        }
        c
    }

    /// The full generating polynomial `sum h^{p,q,k} y^p x^q (-z)^k`, which
    /// remembers all three gradings.
    pub fn full_polynomial(&self) -> LaurentPoly {
        let mut f = LaurentPoly::zero();
        for (&(p, q, k), &h) in &self.entries {
            let signed = if k.rem_euclid(2) == 0 {
                h as i64
            } else {
                -(h as i64)
            };
            f.add_term(Exponents::new(p, q, k), rat(signed));
        }
        f
    }

    /// Aligned `p q k h` text table in canonical order.
    pub fn render_table(&self) -> String {
        let mut lines = vec![["p".to_string(), "q".into(), "k".into(), "h".into()]];
        for (&(p, q, k), &h) in &self.entries {
            lines.push([p.to_string(), q.to_string(), k.to_string(), h.to_string()]);
        }
        let widths: Vec<usize> = (0..4)
            .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for line in &lines {
            let row: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(row.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for HodgeNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_table())
    }
}

/// The Hodge numbers of the projective line: `h^{0,0,0} = h^{1,1,2} = 1`.
pub fn projective_line() -> HodgeNumbers {
    HodgeNumbers::new([((0, 0, 0), 1), ((1, 1, 2), 1)]).expect("static table")
}

/// The Hodge diamond of `m`-dimensional projective space:
/// `h^{p,p,2p} = 1` for `0 <= p <= m`.
pub fn projective_space(m: i64) -> HodgeNumbers {
    HodgeNumbers::new((0..=m).map(|p| ((p, p, 2 * p), 1))).expect("static table")
}
