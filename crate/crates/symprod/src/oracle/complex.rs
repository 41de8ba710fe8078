//! Finite cochain complexes of rational vector spaces, their tensor
//! products with the graded sign rule, and cohomology.
//!
//! The differential of a tensor product acts slot by slot with the usual
//! alternating twist: on `v_1 x ... x v_n` the `i`-th summand carries the
//! sign `(-1)^{deg v_1 + ... + deg v_{i-1}}`. That convention is what makes
//! `d . d = 0` for the product; the constructor asserts it.

use std::collections::BTreeMap;

use num::traits::Zero;
use rand::{Rng, RngExt};
use thiserror::Error;

use crate::linalg::QMatrix;
use crate::ring::{rat, Rat};

use super::space::{GradedSpace, Label, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential out of degree {degree} is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    Shape {
        degree: i64,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("d . d is nonzero out of degree {degree}")]
    SquareNotZero { degree: i64 },
}

/// A finite cochain complex: dimensions per degree and differentials
/// `d_p : K^p -> K^{p+1}`. Missing differentials are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteComplex {
    spaces: GradedSpace,
    diffs: BTreeMap<i64, QMatrix>,
}

impl FiniteComplex {
    /// Builds a complex, checking shapes and `d . d = 0`.
    pub fn new(
        spaces: GradedSpace,
        diffs: impl IntoIterator<Item = (i64, QMatrix)>,
    ) -> Result<Self, ComplexError> {
        let mut kept = BTreeMap::new();
        for (degree, m) in diffs {
            let want_rows = spaces.dim_in(degree + 1);
            let want_cols = spaces.dim_in(degree);
            if m.rows() != want_rows || m.cols() != want_cols {
                return Err(ComplexError::Shape {
                    degree,
                    rows: m.rows(),
                    cols: m.cols(),
                    want_rows,
                    want_cols,
                });
            }
            if !m.is_zero() {
                kept.insert(degree, m);
            }
        }
        let complex = FiniteComplex {
            spaces,
            diffs: kept,
        };
        for &p in complex.diffs.keys() {
            let d_next = complex.differential(p + 1);
            if !(&d_next * &complex.differential(p)).is_zero() {
                return Err(ComplexError::SquareNotZero { degree: p });
            }
        }
        Ok(complex)
    }

    /// A complex with zero differentials.
    pub fn with_zero_differential(spaces: GradedSpace) -> Self {
        FiniteComplex {
            spaces,
            diffs: BTreeMap::new(),
        }
    }

    pub fn spaces(&self) -> &GradedSpace {
        &self.spaces
    }

    pub fn dim_in(&self, degree: i64) -> usize {
        self.spaces.dim_in(degree)
    }

    /// The differential out of degree `p` (a zero matrix when absent).
    pub fn differential(&self, p: i64) -> QMatrix {
        self.diffs.get(&p).cloned().unwrap_or_else(|| {
            QMatrix::zeros(self.spaces.dim_in(p + 1), self.spaces.dim_in(p))
        })
    }

    /// Applies the differential to basis vector `index` of degree `p`,
    /// sparsely: pairs `(target index, coefficient)`.
    pub fn apply_differential(&self, p: i64, index: usize) -> Vec<(usize, Rat)> {
        let Some(d) = self.diffs.get(&p) else {
            return Vec::new();
        };
        (0..d.rows())
            .filter_map(|r| {
                let c = d.get(r, index);
                if c.is_zero() {
                    None
                } else {
                    Some((r, c.clone()))
                }
            })
            .collect()
    }

    /// Cohomology dimensions: `dim ker d_p - rank d_{p-1}` per degree.
    pub fn cohomology(&self) -> GradedSpace {
        let mut dims = Vec::new();
        for (&p, &d) in self.spaces.degrees() {
            let rank_out = self.differential(p).rank();
            let rank_in = self.differential(p - 1).rank();
            let h = d
                .checked_sub(rank_out)
                .and_then(|v| v.checked_sub(rank_in))
                .expect("d . d = 0 bounds the ranks");
            dims.push((p, h));
        }
        GradedSpace::from_dims(dims)
    }

    /// Total Euler characteristic `sum (-1)^p dim K^p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.spaces
            .degrees()
            .map(|(&p, &d)| if p.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// A basis tuple of a tensor product of complexes, one labelled factor per
/// slot.
fn tuple_basis(factors: &[FiniteComplex], bound: usize) -> Result<Vec<Vec<Label>>, OracleError> {
    let mut total: u128 = 1;
    for f in factors {
        total = total.saturating_mul(f.spaces.dim() as u128);
    }
    if total > bound as u128 {
        return Err(OracleError::DimensionBound {
            needed: total,
            bound,
        });
    }
    let mut out: Vec<Vec<Label>> = vec![Vec::new()];
    for f in factors {
        let basis = f.spaces.basis();
        let mut next = Vec::with_capacity(out.len() * basis.len());
        for partial in &out {
            for &label in &basis {
                let mut ext = partial.clone();
                ext.push(label);
                next.push(ext);
            }
        }
        out = next;
    }
    Ok(out)
}

/// The tensor product of finite complexes, with the alternating sign on the
/// slotwise differential.
pub fn tensor_complex(
    factors: &[FiniteComplex],
    bound: usize,
) -> Result<FiniteComplex, OracleError> {
    let tuples = tuple_basis(factors, bound)?;
    // Index tuples per total degree, in enumeration (lexicographic) order.
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        let deg: i64 = t.iter().map(|l| l.degree).sum();
        by_degree.entry(deg).or_default().push(i);
    }
    let position: BTreeMap<&[Label], (i64, usize)> = by_degree
        .iter()
        .flat_map(|(&deg, members)| {
            members
                .iter()
                .enumerate()
                .map(move |(loc, &gi)| (deg, loc, gi))
        })
        .map(|(deg, loc, gi)| (tuples[gi].as_slice(), (deg, loc)))
        .collect();
    let spaces =
        GradedSpace::from_dims(by_degree.iter().map(|(&deg, v)| (deg, v.len())));
    let mut diffs: BTreeMap<i64, QMatrix> = BTreeMap::new();
    for (&deg, members) in &by_degree {
        let rows = spaces.dim_in(deg + 1);
        if rows == 0 {
            continue;
        }
        let mut d = QMatrix::zeros(rows, members.len());
        for (col, &gi) in members.iter().enumerate() {
            let tuple = &tuples[gi];
            let mut sign = 1i64;
            for (slot, label) in tuple.iter().enumerate() {
                for (target, coeff) in factors[slot].apply_differential(label.degree, label.index)
                {
                    let mut image = tuple.clone();
                    image[slot] = Label {
                        degree: label.degree + 1,
                        index: target,
                    };
                    let (ideg, row) = position[image.as_slice()];
                    debug_assert_eq!(ideg, deg + 1);
                    d.add_to(row, col, &(rat(sign) * coeff));
                }
                if label.degree.rem_euclid(2) == 1 {
                    sign = -sign;
                }
            }
        }
        if !d.is_zero() {
            diffs.insert(deg, d);
        }
    }
    let complex = FiniteComplex {
        spaces,
        diffs,
    };
    // The sign rule is exactly what makes the square vanish; check it.
    for &p in complex.diffs.keys() {
        debug_assert!(
            (&complex.differential(p + 1) * &complex.differential(p)).is_zero(),
            "tensor differential does not square to zero"
        );
    }
    Ok(complex)
}

/// Checks that cohomology commutes with tensor products: the cohomology of
/// the product equals the graded convolution of the factor cohomologies.
/// Returns a description of the first mismatch.
pub fn kunneth_check(
    factors: &[FiniteComplex],
    bound: usize,
) -> Result<Option<String>, OracleError> {
    let product = tensor_complex(factors, bound)?;
    let lhs = product.cohomology();
    // Convolve the factor cohomologies degree by degree.
    let mut rhs: BTreeMap<i64, usize> = BTreeMap::new();
    rhs.insert(0, 1);
    for f in factors {
        let h = f.cohomology();
        let mut next: BTreeMap<i64, usize> = BTreeMap::new();
        for (&a, &da) in &rhs {
            for (&b, &db) in h.degrees() {
                *next.entry(a + b).or_insert(0) += da * db;
            }
        }
        rhs = next;
    }
    let rhs = GradedSpace::from_dims(rhs);
    if lhs != rhs {
        return Ok(Some(format!(
            "product cohomology {lhs} differs from convolution {rhs}"
        )));
    }
    Ok(None)
}

/// A random finite complex with known-by-construction structure: a direct
/// sum of two-term identity pieces (acyclic) and one-term pieces (their
/// cohomology), conjugated by a random change of basis in each degree.
pub fn random_complex(
    rng: &mut impl Rng,
    degree_window: std::ops::RangeInclusive<i64>,
    max_dim_per_degree: usize,
) -> FiniteComplex {
    let lo = *degree_window.start();
    let hi = *degree_window.end();
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    // Entries (degree, source index, target index) of identity pieces.
    let mut arrows: Vec<(i64, usize, usize)> = Vec::new();
    for p in lo..=hi {
        // One-term pieces in degree p.
        let singles = rng.random_range(0..=1);
        for _ in 0..singles {
            if dims.get(&p).copied().unwrap_or(0) < max_dim_per_degree {
                *dims.entry(p).or_insert(0) += 1;
            }
        }
        // Two-term pieces spanning degrees p and p + 1.
        if p < hi {
            let pairs = rng.random_range(0..=1);
            for _ in 0..pairs {
                let dp = dims.get(&p).copied().unwrap_or(0);
                let dq = dims.get(&(p + 1)).copied().unwrap_or(0);
                if dp < max_dim_per_degree && dq < max_dim_per_degree {
                    arrows.push((p, dp, dq));
                    *dims.entry(p).or_insert(0) += 1;
                    *dims.entry(p + 1).or_insert(0) += 1;
                }
            }
        }
    }
    let spaces = GradedSpace::from_dims(dims.clone());
    let mut diffs: BTreeMap<i64, QMatrix> = BTreeMap::new();
    for &(p, src, dst) in &arrows {
        let d = diffs
            .entry(p)
            .or_insert_with(|| QMatrix::zeros(spaces.dim_in(p + 1), spaces.dim_in(p)));
        d.set(dst, src, rat(1));
    }
    // Conjugate by unimodular changes of basis: d' = S_{p+1}^{-1} d S_p.
    let changes: BTreeMap<i64, (QMatrix, QMatrix)> = spaces
        .degrees()
        .map(|(&p, &d)| (p, random_unimodular(rng, d)))
        .collect();
    let identity_pair = |n: usize| (QMatrix::identity(n), QMatrix::identity(n));
    let twisted: BTreeMap<i64, QMatrix> = diffs
        .into_iter()
        .map(|(p, d)| {
            let (s_src, _) = changes
                .get(&p)
                .cloned()
                .unwrap_or_else(|| identity_pair(spaces.dim_in(p)));
            let (_, s_dst_inv) = changes
                .get(&(p + 1))
                .cloned()
                .unwrap_or_else(|| identity_pair(spaces.dim_in(p + 1)));
            (p, &(&s_dst_inv * &d) * &s_src)
        })
        .collect();
    FiniteComplex::new(spaces, twisted).expect("conjugated differentials still square to zero")
}

/// A random integer matrix with integer inverse, as a product of elementary
/// operations applied to the identity. Returns `(S, S^{-1})`.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> (QMatrix, QMatrix) {
    let mut s = QMatrix::identity(n);
    let mut s_inv = QMatrix::identity(n);
    if n < 2 {
        return (s, s_inv);
    }
    for _ in 0..2 * n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        let c = rat(rng.random_range(-2..=2i64));
        // S <- E S where E adds c * row j to row i; the inverse composes on
        // the right with the opposite operation: S^{-1} <- S^{-1} E^{-1}.
        for col in 0..n {
            let v = s.get(i, col) + &(s.get(j, col) * &c);
            s.set(i, col, v);
        }
        for row in 0..n {
            let v = s_inv.get(row, j) - &(s_inv.get(row, i) * &c);
            s_inv.set(row, j, v);
        }
    }
    debug_assert_eq!(&s * &s_inv, QMatrix::identity(n));
    (s, s_inv)
}
