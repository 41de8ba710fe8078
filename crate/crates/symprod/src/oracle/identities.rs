//! Cross-checks tying the signed permutation action to the differential:
//! every permutation must act on a tensor power of a complex by a chain
//! map. Verified sparsely, basis vector by basis vector, so exhaustive
//! sweeps over small complexes stay cheap.

use itertools::Itertools;

use crate::linalg::QMatrix;
use crate::ring::{rat, Rat};

use super::action::{apply_signed, sparse_add, SparseTensor};
use super::complex::FiniteComplex;
use super::perm::Permutation;
use super::space::{GradedSpace, Label, OracleError};

/// The tensor differential applied to one basis tuple of `K^{x n}`:
/// slot `i` carries the sign `(-1)^{deg_1 + ... + deg_{i-1}}`.
pub fn apply_tensor_differential(
    k: &FiniteComplex,
    tuple: &[Label],
) -> Vec<(Vec<Label>, Rat)> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    for (slot, label) in tuple.iter().enumerate() {
        for (target, coeff) in k.apply_differential(label.degree, label.index) {
            let mut image = tuple.to_vec();
            image[slot] = Label {
                degree: label.degree + 1,
                index: target,
            };
            out.push((image, rat(sign) * coeff));
        }
        if label.degree.rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    out
}

/// Checks `D(sigma # b) = sigma # (D b)` for every basis tuple `b` of the
/// `n`-th tensor power. Returns the first failing tuple as text.
pub fn chain_map_commutes(
    k: &FiniteComplex,
    n: usize,
    sigma: &Permutation,
    bound: usize,
) -> Result<Option<String>, OracleError> {
    let tuples = k.spaces().tensor_basis(n, bound)?;
    for tuple in &tuples {
        // sigma first, then the differential.
        let (s, image) = apply_signed(sigma, tuple);
        let mut lhs = SparseTensor::new();
        for (t, c) in apply_tensor_differential(k, &image) {
            sparse_add(&mut lhs, t, c * rat(s));
        }
        // Differential first, then sigma.
        let mut rhs = SparseTensor::new();
        for (t, c) in apply_tensor_differential(k, tuple) {
            let (s2, image2) = apply_signed(sigma, &t);
            sparse_add(&mut rhs, image2, c * rat(s2));
        }
        if lhs != rhs {
            return Ok(Some(format!(
                "complex {}, n = {n}, sigma = {:?}, tuple {:?}: D(sigma # b) != sigma # D(b)",
                k.spaces(),
                sigma.images(),
                tuple
            )));
        }
    }
    Ok(None)
}

/// Every complex concentrated in the two degrees `offset`, `offset + 1`
/// with dimensions at most `max_dim` and differential entries in
/// `{-1, 0, 1}`.
pub fn two_degree_complexes(offset: i64, max_dim: usize) -> Vec<FiniteComplex> {
    let mut out = Vec::new();
    for d0 in 0..=max_dim {
        for d1 in 0..=max_dim {
            if d0 == 0 && d1 == 0 {
                continue;
            }
            let spaces = GradedSpace::from_dims([(offset, d0), (offset + 1, d1)]);
            let cells = d0 * d1;
            if cells == 0 {
                out.push(FiniteComplex::with_zero_differential(spaces));
                continue;
            }
            // Every entry pattern over {-1, 0, 1}.
            for assignment in (0..cells).map(|_| -1i64..=1).multi_cartesian_product() {
                let mut m = QMatrix::zeros(d1, d0);
                for (cell, v) in assignment.iter().enumerate() {
                    m.set(cell / d0, cell % d0, rat(*v));
                }
                out.push(
                    FiniteComplex::new(spaces.clone(), [(offset, m)])
                        .expect("one differential always squares to zero"),
                );
            }
        }
    }
    out
}
