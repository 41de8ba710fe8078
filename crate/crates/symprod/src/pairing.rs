//! Graded-symmetric pairings on finite graded vector spaces, their
//! signature invariants, the closed-form signature generating series for
//! symmetric products, and the brute-force induced-pairing computation the
//! series is checked against.
//!
//! A pairing is stored by its blocks `B_i : V^i x V^{-i} -> Q` for `i >= 0`;
//! graded symmetry forces `B_{-i} = (-1)^i B_i^T` (so the odd part is
//! antisymmetric and `B_0` is symmetric), and that is how negative-degree
//! values are produced. Degenerate pairings are allowed everywhere.
//!
//! The JSON exchange format is
//!
//! ```json
//! {
//!   "dims": {"-1": 1, "1": 1},
//!   "blocks": [{"i": 1, "matrix": [["1"]]}]
//! }
//! ```
//!
//! with matrix entries written as exact rationals (`"2"`, `"-1/3"`). Blocks
//! may only be listed for `i >= 0`; a missing block is zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::QMatrix;
use crate::oracle::{
    interchange_exponent, isotypic_dims, symmetrize, Character, GradedSpace, Label, SparseTensor,
};
use crate::ring::{rat, Rat, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid dimension key {0:?}: expected an integer degree")]
    BadDegreeKey(String),
    #[error("block listed for negative degree {0}; blocks determine the negative side")]
    NegativeBlockDegree(i64),
    #[error("duplicate block for degree {0}")]
    DuplicateBlock(i64),
    #[error(
        "block for degree {degree} is {rows}x{cols}, expected {want_rows}x{want_cols} \
         from the dimensions"
    )]
    BlockShape {
        degree: i64,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("degree-0 block must be symmetric")]
    AsymmetricDegreeZero,
    #[error("invalid matrix entry {0:?}: expected an exact rational like \"2\" or \"-1/3\"")]
    BadEntry(String),
    #[error("tensor power would have {needed} basis elements, above the bound {bound}")]
    BoundExceeded { needed: u128, bound: usize },
    #[error("sigma = {sigma} and chi = {chi} have different parities; invariants are corrupt")]
    ParityViolation { sigma: i64, chi: i64 },
    #[error("induced Gram matrix came out asymmetric; sign conventions are inconsistent")]
    AsymmetricGram,
}

/// A graded-symmetric pairing, possibly degenerate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPairing {
    dims: BTreeMap<i64, usize>,
    blocks: BTreeMap<i64, QMatrix>,
}

/// Ranks, signature, and Euler characteristic of a pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingInvariants {
    /// Rank of the pairing between degrees `i` and `-i`, keyed by `i` (both
    /// signs listed; always symmetric under negation).
    pub rho: BTreeMap<i64, usize>,
    /// Signature of the degree-0 block.
    pub sigma: i64,
    /// `sum_i (-1)^i rho_i`.
    pub chi: i64,
}

#[derive(Serialize, Deserialize)]
struct PairingDoc {
    dims: BTreeMap<String, usize>,
    #[serde(default)]
    blocks: Vec<BlockDoc>,
}

#[derive(Serialize, Deserialize)]
struct BlockDoc {
    i: i64,
    matrix: Vec<Vec<String>>,
}

impl GradedPairing {
    /// Builds a pairing from dimensions and the blocks for `i >= 0`,
    /// validating shapes and the symmetry of the degree-0 block.
    pub fn new(
        dims: impl IntoIterator<Item = (i64, usize)>,
        blocks: impl IntoIterator<Item = (i64, QMatrix)>,
    ) -> Result<Self, PairingError> {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
        let dim_of = |i: i64| dims.get(&i).copied().unwrap_or(0);
        let mut kept = BTreeMap::new();
        for (degree, m) in blocks {
            if degree < 0 {
                return Err(PairingError::NegativeBlockDegree(degree));
            }
            let want_rows = dim_of(degree);
            let want_cols = dim_of(-degree);
            if m.rows() != want_rows || m.cols() != want_cols {
                return Err(PairingError::BlockShape {
                    degree,
                    rows: m.rows(),
                    cols: m.cols(),
                    want_rows,
                    want_cols,
                });
            }
            if degree == 0 && !m.is_symmetric() {
                return Err(PairingError::AsymmetricDegreeZero);
            }
            if kept.insert(degree, m).is_some() {
                return Err(PairingError::DuplicateBlock(degree));
            }
        }
        kept.retain(|_, m| !m.is_zero());
        Ok(GradedPairing { dims, blocks: kept })
    }

    pub fn from_json_str(text: &str) -> Result<Self, PairingError> {
        let doc: PairingDoc =
            serde_json::from_str(text).map_err(|e| PairingError::Json(e.to_string()))?;
        let mut dims = Vec::new();
        for (key, d) in doc.dims {
            let degree: i64 = key
                .trim()
                .parse()
                .map_err(|_| PairingError::BadDegreeKey(key.clone()))?;
            dims.push((degree, d));
        }
        let mut blocks = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for block in doc.blocks {
            if !seen.insert(block.i) {
                return Err(PairingError::DuplicateBlock(block.i));
            }
            let rows = block.matrix.len();
            let cols = block.matrix.first().map_or(0, Vec::len);
            if block.matrix.iter().any(|r| r.len() != cols) {
                return Err(PairingError::BadEntry("ragged matrix rows".into()));
            }
            let mut m = QMatrix::zeros(rows, cols);
            for (r, row) in block.matrix.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let v = Rat::from_str(entry.trim())
                        .map_err(|_| PairingError::BadEntry(entry.clone()))?;
                    m.set(r, c, v);
                }
            }
            blocks.push((block.i, m));
        }
        GradedPairing::new(dims, blocks)
    }

    pub fn to_json_string(&self) -> String {
        let doc = PairingDoc {
            dims: self
                .dims
                .iter()
                .map(|(&i, &d)| (i.to_string(), d))
                .collect(),
            blocks: self
                .blocks
                .iter()
                .map(|(&i, m)| BlockDoc {
                    i,
                    matrix: (0..m.rows())
                        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn dim_in(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// The underlying graded space.
    pub fn space(&self) -> GradedSpace {
        GradedSpace::from_dims(self.dims.iter().map(|(&i, &d)| (i, d)))
    }

    /// The stored block for `i >= 0` (zero matrix if absent).
    pub fn block(&self, degree: i64) -> QMatrix {
        assert!(degree >= 0, "blocks are stored for nonnegative degrees");
        self.blocks.get(&degree).cloned().unwrap_or_else(|| {
            QMatrix::zeros(self.dim_in(degree), self.dim_in(-degree))
        })
    }

    /// The pairing value on two basis vectors. Nonzero only when the
    /// degrees cancel; negative-degree lookups route through graded
    /// symmetry `phi(u, v) = (-1)^{|u||v|} phi(v, u)`.
    pub fn phi(&self, a: Label, b: Label) -> Rat {
        if a.degree + b.degree != 0 {
            return Rat::zero();
        }
        if a.degree >= 0 {
            match self.blocks.get(&a.degree) {
                Some(m) => m.get(a.index, b.index).clone(),
                None => Rat::zero(),
            }
        } else {
            let v = match self.blocks.get(&b.degree) {
                Some(m) => m.get(b.index, a.index).clone(),
                None => Rat::zero(),
            };
            // deg(a) * deg(b) = -i^2 has the parity of i.
            if a.degree.rem_euclid(2) == 1 {
                -v
            } else {
                v
            }
        }
    }

    /// Ranks, signature of the degree-0 block, and the signed rank sum.
    pub fn invariants(&self) -> PairingInvariants {
        let mut rho = BTreeMap::new();
        for &i in self.dims.keys() {
            let rank = self.block(i.abs()).rank();
            rho.insert(i, rank);
        }
        let sigma = if self.dim_in(0) > 0 {
            self.block(0).signature()
        } else {
            0
        };
        let chi = rho
            .iter()
            .map(|(&i, &r)| {
                if i.rem_euclid(2) == 0 {
                    r as i64
                } else {
                    -(r as i64)
                }
            })
            .sum();
        PairingInvariants { rho, sigma, chi }
    }

    /// The signature generating series
    /// `(1 + t)^{(sigma - chi)/2} / (1 - t)^{(sigma + chi)/2}` truncated at
    /// the given order; the `t^n` coefficient is the signature of the
    /// induced pairing on the `n`-th symmetric product.
    pub fn hz_series(&self, order: usize) -> Result<TruncSeries, PairingError> {
        let inv = self.invariants();
        hz_series_from_invariants(&inv, order)
    }

    /// Orthogonal direct sum: dimensions add, blocks become block-diagonal.
    pub fn direct_sum(&self, other: &GradedPairing) -> GradedPairing {
        let mut dims = self.dims.clone();
        for (&i, &d) in &other.dims {
            *dims.entry(i).or_insert(0) += d;
        }
        let degrees: std::collections::BTreeSet<i64> = self
            .blocks
            .keys()
            .chain(other.blocks.keys())
            .copied()
            .collect();
        let dim_of = |p: &GradedPairing, i: i64| p.dim_in(i);
        let mut blocks = BTreeMap::new();
        for &i in &degrees {
            let (a, b) = (self.block(i), other.block(i));
            let rows = dim_of(self, i) + dim_of(other, i);
            let cols = dim_of(self, -i) + dim_of(other, -i);
            let mut m = QMatrix::zeros(rows, cols);
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    m.set(r, c, a.get(r, c).clone());
                }
            }
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m.set(dim_of(self, i) + r, dim_of(self, -i) + c, b.get(r, c).clone());
                }
            }
            blocks.insert(i, m);
        }
        GradedPairing::new(dims, blocks).expect("direct sum of valid pairings is valid")
    }

    /// All degree-zero multi-indices for the `n`-th symmetric power, in
    /// lexicographic order of their expanded label lists.
    pub fn degree_zero_indices(&self, n: usize, bound: usize) -> Result<Vec<MultiIndex>, PairingError> {
        self.check_bound(n, bound)?;
        let labels = self.space().basis();
        let mut out = Vec::new();
        let mut current: Vec<Label> = Vec::new();
        enumerate_rec(&labels, 0, n, &mut current, &mut out);
        Ok(out)
    }

    fn check_bound(&self, n: usize, bound: usize) -> Result<(), PairingError> {
        let needed = (self.total_dim() as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        if needed > bound as u128 {
            return Err(PairingError::BoundExceeded { needed, bound });
        }
        Ok(())
    }

    /// The full induced pairing on tensor tuples:
    /// `Phi(u, w) = (-1)^{interchange} prod_i phi(u_i, w_i)`.
    pub fn pair_tuples(&self, u: &[Label], w: &[Label]) -> Rat {
        let mut product = Rat::one();
        for (a, b) in u.iter().zip(w) {
            let v = self.phi(*a, *b);
            if v.is_zero() {
                return Rat::zero();
            }
            product *= v;
        }
        let u_degrees: Vec<i64> = u.iter().map(|l| l.degree).collect();
        let w_degrees: Vec<i64> = w.iter().map(|l| l.degree).collect();
        if interchange_exponent(&u_degrees, &w_degrees) == 1 {
            -product
        } else {
            product
        }
    }

    /// `Phi` extended bilinearly to sparse tensors.
    pub fn pair_sparse(&self, u: &SparseTensor, w: &SparseTensor) -> Rat {
        let mut total = Rat::zero();
        for (tu, cu) in u {
            for (tw, cw) in w {
                let v = self.pair_tuples(tu, tw);
                if !v.is_zero() {
                    total += cu * cw * v;
                }
            }
        }
        total
    }

    /// Gram matrix of the induced pairing on the degree-0 invariant
    /// subspace, in the symmetrized multi-index basis.
    pub fn induced_gram(&self, n: usize, bound: usize) -> Result<QMatrix, PairingError> {
        let indices = self.degree_zero_indices(n, bound)?;
        self.gram_on(&indices)
    }

    /// Gram matrix over an explicit list of multi-indices.
    fn gram_on(&self, indices: &[MultiIndex]) -> Result<QMatrix, PairingError> {
        let symmetrized: Vec<SparseTensor> = indices
            .iter()
            .map(|mu| symmetrize(&mu.labels(), Character::Trivial))
            .collect();
        let m = indices.len();
        let mut g = QMatrix::zeros(m, m);
        for a in 0..m {
            for b in 0..m {
                g.set(a, b, self.pair_sparse(&symmetrized[a], &symmetrized[b]));
            }
        }
        if !g.is_symmetric() {
            return Err(PairingError::AsymmetricGram);
        }
        Ok(g)
    }

    /// Signature of the `n`-th symmetric product computed the slow way,
    /// from the full induced Gram matrix.
    pub fn brute_signature(&self, n: usize, bound: usize) -> Result<i64, PairingError> {
        Ok(self.induced_gram(n, bound)?.signature())
    }

    /// Brute signature computed only on the multi-indices fixed by the
    /// mirror involution `(i, j) -> (-i, j)`.
    ///
    /// For pairings whose blocks are diagonal (basis vectors pair only with
    /// their mirror partner of the same index), the non-fixed indices span
    /// hyperbolic planes and dropping them preserves the signature. For
    /// general blocks that is not true — see the unit tests for a concrete
    /// 2x2 example — so callers should restrict to aligned bases.
    pub fn brute_signature_mirror_fixed(
        &self,
        n: usize,
        bound: usize,
    ) -> Result<i64, PairingError> {
        let indices: Vec<MultiIndex> = self
            .degree_zero_indices(n, bound)?
            .into_iter()
            .filter(MultiIndex::is_mirror_fixed)
            .collect();
        Ok(self.gram_on(&indices)?.signature())
    }

    /// Every block of the pairing is diagonal: entry `(j, j')` can be
    /// nonzero only for `j = j'`.
    pub fn has_diagonal_blocks(&self) -> bool {
        self.blocks.values().all(|m| {
            (0..m.rows()).all(|r| (0..m.cols()).all(|c| r == c || m.get(r, c).is_zero()))
        })
    }

    /// Checks that the symmetrizer is self-adjoint for the induced pairing:
    /// `Phi(e_1 u, e_1 w) = Phi(u, e_1 w)` over all degree-0 basis tuples.
    pub fn check_symmetrizer_self_adjoint(
        &self,
        n: usize,
        bound: usize,
    ) -> Result<Option<String>, PairingError> {
        self.check_bound(n, bound)?;
        let tuples = self
            .space()
            .tensor_basis(n, bound)
            .map_err(|e| match e {
                crate::oracle::OracleError::DimensionBound { needed, bound } => {
                    PairingError::BoundExceeded { needed, bound }
                }
            })?;
        for u in tuples.iter().filter(|t| degree_sum(t) == 0) {
            let eu = symmetrize(u, Character::Trivial);
            let mut plain_u = SparseTensor::new();
            plain_u.insert(u.clone(), Rat::one());
            for w in tuples.iter().filter(|t| degree_sum(t) == 0) {
                let ew = symmetrize(w, Character::Trivial);
                let lhs = self.pair_sparse(&eu, &ew);
                let rhs = self.pair_sparse(&plain_u, &ew);
                if lhs != rhs {
                    return Ok(Some(format!(
                        "n = {n}, u = {u:?}, w = {w:?}: Phi(e u, e w) = {lhs} but \
                         Phi(u, e w) = {rhs}"
                    )));
                }
            }
        }
        Ok(None)
    }
}

fn degree_sum(tuple: &[Label]) -> i64 {
    tuple.iter().map(|l| l.degree).sum()
}

/// Recursive enumeration of sorted label multisets of size `n` with total
/// degree zero and odd labels used at most once.
fn enumerate_rec(
    labels: &[Label],
    pos: usize,
    remaining: usize,
    current: &mut Vec<Label>,
    out: &mut Vec<MultiIndex>,
) {
    if remaining == 0 {
        if degree_sum(current) == 0 {
            out.push(MultiIndex::from_labels(current));
        }
        return;
    }
    if pos == labels.len() {
        return;
    }
    let label = labels[pos];
    let max_mult = if label.degree.rem_euclid(2) == 1 {
        1.min(remaining)
    } else {
        remaining
    };
    for mult in 0..=max_mult {
        for _ in 0..mult {
            current.push(label);
        }
        enumerate_rec(labels, pos + 1, remaining - mult, current, out);
        for _ in 0..mult {
            current.pop();
        }
    }
}

/// A degree-zero multi-index: multiplicities over basis labels, summing to
/// `n`, with odd labels used at most once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiIndex {
    counts: BTreeMap<(i64, usize), u64>,
}

impl MultiIndex {
    pub fn from_labels(labels: &[Label]) -> Self {
        let mut counts = BTreeMap::new();
        for l in labels {
            *counts.entry((l.degree, l.index)).or_insert(0) += 1;
        }
        MultiIndex { counts }
    }

    /// The expanded, sorted label list.
    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::new();
        for (&(degree, index), &mult) in &self.counts {
            for _ in 0..mult {
                out.push(Label { degree, index });
            }
        }
        out
    }

    pub fn counts(&self) -> &BTreeMap<(i64, usize), u64> {
        &self.counts
    }

    /// The mirror involution `mu'_{i,j} = mu_{-i,j}`.
    pub fn mirrored(&self) -> MultiIndex {
        MultiIndex {
            counts: self
                .counts
                .iter()
                .map(|(&(i, j), &m)| ((-i, j), m))
                .collect(),
        }
    }

    pub fn is_mirror_fixed(&self) -> bool {
        self == &self.mirrored()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(&(i, j), &m)| format!("({i},{j})^{m}"))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The closed-form series from precomputed invariants.
pub fn hz_series_from_invariants(
    inv: &PairingInvariants,
    order: usize,
) -> Result<TruncSeries, PairingError> {
    let diff = inv.sigma - inv.chi;
    let sum = inv.sigma + inv.chi;
    if diff.rem_euclid(2) != 0 || sum.rem_euclid(2) != 0 {
        return Err(PairingError::ParityViolation {
            sigma: inv.sigma,
            chi: inv.chi,
        });
    }
    let a = diff / 2;
    let b = sum / 2;
    // (1 + t)^a * (1 - t)^{-b}, both via integer series powers.
    let one_plus_t = &TruncSeries::one(order) + &TruncSeries::t(order);
    let one_minus_t = &TruncSeries::one(order) - &TruncSeries::t(order);
    let left = one_plus_t.pow_int(a).expect("constant term is 1");
    let right = one_minus_t.pow_int(-b).expect("constant term is 1");
    Ok(&left * &right)
}

/// Extracts the integer coefficients of a series whose coefficients are
/// constants (as the signature series always is).
pub fn series_int_coeffs(series: &TruncSeries) -> Vec<i64> {
    series
        .coeffs()
        .iter()
        .map(|c| {
            assert!(
                c.iter().all(|(e, _)| e.is_constant()),
                "series coefficient is not constant"
            );
            let v = c.constant_term();
            assert!(v.is_integer(), "series coefficient is not an integer");
            i64::try_from(v.to_integer()).expect("coefficient out of range")
        })
        .collect()
}

/// Convenience: the `n`-th coefficient of the closed-form series.
pub fn hz_coefficient(phi: &GradedPairing, n: usize) -> Result<i64, PairingError> {
    let series = phi.hz_series(n)?;
    Ok(series_int_coeffs(&series)[n])
}

/// A single-degree pairing with the given block at `degree >= 0` and the
/// mirrored dimensions implied by the block shape.
pub fn single_block(degree: i64, m: QMatrix) -> Result<GradedPairing, PairingError> {
    assert!(degree >= 0);
    let mut dims = vec![(degree, m.rows())];
    if degree != 0 {
        dims.push((-degree, m.cols()));
    }
    GradedPairing::new(dims, [(degree, m)])
}

/// Builds `LaurentPoly`-free text for a series of integer coefficients.
pub fn render_signature_table(series: &TruncSeries) -> String {
    let coeffs = series_int_coeffs(series);
    let mut out = String::new();
    for (n, c) in coeffs.iter().enumerate() {
        out.push_str(&format!("{n}: {c}\n"));
    }
    out
}

/// The exhaustive single-degree test library: every block at degree `0`,
/// `1`, `2` with dimensions up to 2 and entries in `{-1, 0, 1}` (the
/// degree-0 blocks symmetric), covering all sign and degeneracy patterns.
pub fn single_degree_library() -> Vec<GradedPairing> {
    let mut out = Vec::new();
    let values = [-1i64, 0, 1];
    // Degree 0, dimension 1: [v].
    for v in values {
        out.push(single_block(0, QMatrix::from_fn(1, 1, |_, _| rat(v))).unwrap());
    }
    // Degree 0, dimension 2: symmetric [[a, b], [b, c]].
    for a in values {
        for b in values {
            for c in values {
                let m = QMatrix::from_rows(vec![
                    vec![rat(a), rat(b)],
                    vec![rat(b), rat(c)],
                ]);
                out.push(single_block(0, m).unwrap());
            }
        }
    }
    // Degrees 1 and 2, all shapes up to 2x2, all entry patterns.
    for degree in [1i64, 2] {
        for rows in 1..=2usize {
            for cols in 1..=2usize {
                let cells = rows * cols;
                for pattern in (0..cells)
                    .map(|_| values.iter().copied())
                    .multi_cartesian_product()
                {
                    let m = QMatrix::from_fn(rows, cols, |r, c| rat(pattern[r * cols + c]));
                    out.push(single_block(degree, m).unwrap());
                }
            }
        }
    }
    out
}

/// Fixed-seed random multi-degree pairings: direct sums of single-degree
/// blocks over degrees `|i| <= 2` with dimensions up to 2 and entries in
/// `{-1, 0, 1}`.
pub fn random_library(count: usize, seed: u64) -> Vec<GradedPairing> {
    use rand::RngExt;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut phi = GradedPairing::default();
        for degree in 0..=2i64 {
            if !rng.random_bool(0.6) {
                continue;
            }
            let rows = rng.random_range(1..=2usize);
            let cols = if degree == 0 {
                rows
            } else {
                rng.random_range(1..=2usize)
            };
            let mut m = QMatrix::from_fn(rows, cols, |_, _| rat(rng.random_range(-1..=1)));
            if degree == 0 {
                // Symmetrize by copying the upper triangle down.
                for r in 0..rows {
                    for c in 0..r {
                        let v = m.get(c, r).clone();
                        m.set(r, c, v);
                    }
                }
            }
            phi = phi.direct_sum(&single_block(degree, m).unwrap());
        }
        if phi.total_dim() == 0 {
            continue;
        }
        out.push(phi);
    }
    out
}

/// The diagonal (aligned-basis) library: every block diagonal with entries
/// in `{-1, 0, 1}`, which is the setting where mirror-dropping preserves
/// the signature.
pub fn diagonal_library() -> Vec<GradedPairing> {
    let values = [-1i64, 0, 1];
    let mut out = Vec::new();
    for degree in 0..=2i64 {
        for dim in 1..=2usize {
            for pattern in (0..dim)
                .map(|_| values.iter().copied())
                .multi_cartesian_product()
            {
                let m = QMatrix::from_fn(dim, dim, |r, c| {
                    if r == c {
                        rat(pattern[r])
                    } else {
                        rat(0)
                    }
                });
                out.push(single_block(degree, m).unwrap());
            }
        }
    }
    // A few direct sums across degrees, exercising mixed-parity indices.
    let sums: Vec<GradedPairing> = {
        let pos_line = single_block(0, QMatrix::identity(1)).unwrap();
        let neg_line = single_block(0, QMatrix::identity(1).scale(&rat(-1))).unwrap();
        let odd_pair = single_block(1, QMatrix::identity(1)).unwrap();
        let even_pair = single_block(2, QMatrix::identity(1)).unwrap();
        vec![
            pos_line.direct_sum(&odd_pair),
            neg_line.direct_sum(&even_pair),
            odd_pair.direct_sum(&even_pair),
            pos_line.direct_sum(&odd_pair).direct_sum(&even_pair),
        ]
    };
    out.extend(sums);
    out
}

/// Checks that the multi-index count matches the degree-0 invariant
/// dimension from the projector-rank computation.
pub fn check_index_count(
    phi: &GradedPairing,
    n: usize,
    bound: usize,
) -> Result<Option<String>, PairingError> {
    let count = phi.degree_zero_indices(n, bound)?.len();
    let iso = isotypic_dims(&phi.space(), n, Character::Trivial, bound).map_err(|e| match e {
        crate::oracle::OracleError::DimensionBound { needed, bound } => {
            PairingError::BoundExceeded { needed, bound }
        }
    })?;
    let degree_zero = iso.dim_in(0);
    if count != degree_zero {
        return Ok(Some(format!(
            "n = {n}: {count} degree-zero multi-indices but projector rank {degree_zero}"
        )));
    }
    Ok(None)
}

/// The `1 - t^2` fixture: one-dimensional pieces in degrees 1 and -1 paired
/// by the identity.
pub fn odd_pair() -> GradedPairing {
    single_block(1, QMatrix::identity(1)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    fn positive_line() -> GradedPairing {
        single_block(0, QMatrix::identity(1)).unwrap()
    }

    fn negative_line() -> GradedPairing {
        single_block(0, QMatrix::identity(1).scale(&rat(-1))).unwrap()
    }

    fn even_pair() -> GradedPairing {
        single_block(2, QMatrix::identity(1)).unwrap()
    }

    #[test]
    fn parse_round_trip_and_validation() {
        let text = r#"{"dims": {"-1": 1, "1": 1}, "blocks": [{"i": 1, "matrix": [["1"]]}]}"#;
        let phi = GradedPairing::from_json_str(text).unwrap();
        assert_eq!(phi, odd_pair());
        let again = GradedPairing::from_json_str(&phi.to_json_string()).unwrap();
        assert_eq!(again, phi);
        // Negative block degrees are rejected.
        let neg = r#"{"dims": {"-1": 1, "1": 1}, "blocks": [{"i": -1, "matrix": [["1"]]}]}"#;
        assert_eq!(
            GradedPairing::from_json_str(neg).unwrap_err(),
            PairingError::NegativeBlockDegree(-1)
        );
        // An asymmetric degree-0 block is rejected.
        let asym = r#"{"dims": {"0": 2},
            "blocks": [{"i": 0, "matrix": [["0", "1"], ["-1", "0"]]}]}"#;
        assert_eq!(
            GradedPairing::from_json_str(asym).unwrap_err(),
            PairingError::AsymmetricDegreeZero
        );
        // Entries must be exact rationals.
        let bad = r#"{"dims": {"0": 1}, "blocks": [{"i": 0, "matrix": [["0.5"]]}]}"#;
        assert!(matches!(
            GradedPairing::from_json_str(bad).unwrap_err(),
            PairingError::BadEntry(_)
        ));
        // Shape mismatches are rejected.
        let shape = r#"{"dims": {"0": 1}, "blocks": [{"i": 0, "matrix": [["1", "0"]]}]}"#;
        assert!(matches!(
            GradedPairing::from_json_str(shape).unwrap_err(),
            PairingError::BlockShape { .. }
        ));
    }

    #[test]
    fn phi_uses_graded_symmetry_for_negative_degrees() {
        let phi = odd_pair();
        let up = Label { degree: 1, index: 0 };
        let down = Label { degree: -1, index: 0 };
        assert_eq!(phi.phi(up, down), rat(1));
        // Odd degrees anticommute.
        assert_eq!(phi.phi(down, up), rat(-1));
        assert_eq!(phi.phi(up, up), rat(0));
        let even = even_pair();
        let up2 = Label { degree: 2, index: 0 };
        let down2 = Label { degree: -2, index: 0 };
        assert_eq!(even.phi(up2, down2), rat(1));
        assert_eq!(even.phi(down2, up2), rat(1));
    }

    #[test]
    fn invariants_of_primitive_pairings() {
        let inv = positive_line().invariants();
        assert_eq!((inv.rho[&0], inv.sigma, inv.chi), (1, 1, 1));
        let inv = single_block(0, QMatrix::zeros(1, 1)).unwrap().invariants();
        assert_eq!((inv.rho.get(&0), inv.sigma, inv.chi), (Some(&0), 0, 0));
        let inv = odd_pair().invariants();
        assert_eq!(inv.rho[&1], 1);
        assert_eq!(inv.rho[&-1], 1);
        assert_eq!((inv.sigma, inv.chi), (0, -2));
        let inv = even_pair().invariants();
        assert_eq!((inv.sigma, inv.chi), (0, 2));
    }

    #[test]
    fn hz_series_primitive_cases() {
        assert_eq!(
            series_int_coeffs(&positive_line().hz_series(3).unwrap()),
            vec![1, 1, 1, 1]
        );
        assert_eq!(
            series_int_coeffs(&negative_line().hz_series(3).unwrap()),
            vec![1, -1, 1, -1]
        );
        assert_eq!(
            series_int_coeffs(&odd_pair().hz_series(4).unwrap()),
            vec![1, 0, -1, 0, 0]
        );
        assert_eq!(
            series_int_coeffs(&even_pair().hz_series(4).unwrap()),
            vec![1, 0, 1, 0, 1]
        );
    }

    #[test]
    fn degree_zero_index_enumeration() {
        // Sym^3 of a degree-0 line: one index.
        let idx = positive_line().degree_zero_indices(3, 1000).unwrap();
        assert_eq!(idx.len(), 1);
        assert_eq!(idx[0].counts()[&(0, 0)], 3);
        // Odd pair at n = 2: only the balanced index.
        let idx = odd_pair().degree_zero_indices(2, 1000).unwrap();
        assert_eq!(idx.len(), 1);
        assert!(idx[0].is_mirror_fixed());
        // Odd pair at n = 3: unsatisfiable.
        assert!(odd_pair().degree_zero_indices(3, 1000).unwrap().is_empty());
    }

    #[test]
    fn induced_gram_primitive_cases() {
        let g = positive_line().induced_gram(2, 1000).unwrap();
        assert_eq!(g.rows(), 1);
        assert!(g.get(0, 0) > &rat(0));
        // (-1)^2 = 1: the square of a negative line is positive.
        let g = negative_line().induced_gram(2, 1000).unwrap();
        assert!(g.get(0, 0) > &rat(0));
        // The odd pair squares to a negative line.
        let g = odd_pair().induced_gram(2, 1000).unwrap();
        assert_eq!(g.rows(), 1);
        assert_eq!(g.get(0, 0), &ratio(-1, 2));
    }

    #[test]
    fn brute_signature_matches_series_on_anchors() {
        for n in 0..=4 {
            assert_eq!(positive_line().brute_signature(n, 1000).unwrap(), 1);
        }
        let expected = [1, 0, -1, 0, 0];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(odd_pair().brute_signature(n, 1000).unwrap(), want, "n = {n}");
        }
        // Degenerate diag(1, 0): series 1/(1 - t).
        let degenerate = single_block(
            0,
            QMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(0)]]),
        )
        .unwrap();
        assert_eq!(degenerate.brute_signature(2, 1000).unwrap(), 1);
        let inv = degenerate.invariants();
        assert_eq!((inv.sigma, inv.chi), (1, 1));
    }

    #[test]
    fn direct_sum_multiplies_series() {
        let sum = positive_line().direct_sum(&odd_pair());
        let series = sum.hz_series(4).unwrap();
        let lhs = series_int_coeffs(&series);
        let product = &positive_line().hz_series(4).unwrap() * &odd_pair().hz_series(4).unwrap();
        assert_eq!(lhs, series_int_coeffs(&product));
        // And the brute oracle agrees with the product series.
        for n in 0..=3 {
            assert_eq!(
                sum.brute_signature(n, 10000).unwrap(),
                lhs[n],
                "n = {n}"
            );
        }
    }

    #[test]
    fn mirror_dropping_holds_for_diagonal_blocks() {
        for phi in diagonal_library() {
            for n in 0..=3 {
                let full = phi.brute_signature(n, 10000).unwrap();
                let dropped = phi.brute_signature_mirror_fixed(n, 10000).unwrap();
                assert_eq!(full, dropped, "pairing {:?}, n = {n}", phi.dims());
            }
        }
    }

    #[test]
    fn mirror_dropping_needs_aligned_blocks() {
        // The antidiagonal odd block pairs index 1 with index 2; the
        // non-fixed multi-indices carry all the negative directions, so
        // dropping them changes the answer even though the closed form
        // still matches the full computation.
        let anti = single_block(
            1,
            QMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]),
        )
        .unwrap();
        let full = anti.brute_signature(2, 10000).unwrap();
        assert_eq!(full, hz_coefficient(&anti, 2).unwrap());
        assert_eq!(full, -2);
        let dropped = anti.brute_signature_mirror_fixed(2, 10000).unwrap();
        assert_eq!(dropped, 0);
        assert_ne!(full, dropped);
        assert!(!anti.has_diagonal_blocks());
    }

    #[test]
    fn symmetrizer_self_adjointness() {
        for phi in [positive_line(), odd_pair(), even_pair()] {
            for n in 1..=3 {
                assert_eq!(
                    phi.check_symmetrizer_self_adjoint(n, 10000).unwrap(),
                    None,
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn index_count_matches_projector_rank() {
        for phi in [positive_line(), odd_pair(), even_pair()] {
            for n in 0..=3 {
                assert_eq!(check_index_count(&phi, n, 10000).unwrap(), None, "n = {n}");
            }
        }
    }

    #[test]
    fn library_sizes() {
        // 3 + 27 degree-0 blocks, then 3 + 9 + 9 + 81 = 102 for each of
        // degrees 1 and 2.
        assert_eq!(single_degree_library().len(), 3 + 27 + 102 + 102);
        assert_eq!(random_library(10, 0).len(), 10);
    }
}
