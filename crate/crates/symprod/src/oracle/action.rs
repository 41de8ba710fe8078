//! The signed permutation action on tensor powers of a graded space, and
//! the dimensions of its isotypic pieces.
//!
//! A permutation `s` sends the basis tensor `b_1 x ... x b_n` to
//! `(-1)^{nu(s, deg b)} b_{s(1)} x ... x b_{s(n)}`; pulling factors from the
//! slots prescribed by `s` makes the matrices satisfy
//! `M[t] M[s] = M[s . t]` slotwise, i.e. the action is an antihomomorphism
//! on matrices, which is exactly what the group-averaged projectors below
//! need.

use std::collections::BTreeMap;

use crate::linalg::QMatrix;
use crate::macdonald::{sym_wedge_dims, sym_wedge_dims_sign, TriGradedDims};
use crate::ring::{rat, ratio, Rat};

use super::perm::{nu_sign, permuted_degrees, Permutation};
use super::space::{degrees_of, total_degree, GradedSpace, Label, OracleError};

/// The two one-dimensional characters of the symmetric group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Character {
    Trivial,
    Sign,
}

impl Character {
    pub fn value(self, sigma: &Permutation) -> i64 {
        match self {
            Character::Trivial => 1,
            Character::Sign => sigma.sign(),
        }
    }
}

/// Applies `sigma` to a basis tuple: slot `i` of the result holds factor
/// `sigma(i)` of the input.
pub fn permute_tuple(sigma: &Permutation, tuple: &[Label]) -> Vec<Label> {
    (0..tuple.len()).map(|i| tuple[sigma.apply(i)]).collect()
}

/// The matrix of the signed action of `sigma` on the full tensor power, in
/// the lexicographic tuple basis.
pub fn tensor_action(
    space: &GradedSpace,
    n: usize,
    sigma: &Permutation,
    bound: usize,
) -> Result<QMatrix, OracleError> {
    let basis = space.tensor_basis(n, bound)?;
    let index: BTreeMap<&[Label], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.as_slice(), i))
        .collect();
    let mut m = QMatrix::zeros(basis.len(), basis.len());
    for (col, tuple) in basis.iter().enumerate() {
        let degrees = degrees_of(tuple);
        let sign = nu_sign(sigma, &degrees);
        let image = permute_tuple(sigma, tuple);
        let row = index[image.as_slice()];
        m.set(row, col, rat(sign));
    }
    Ok(m)
}

/// Dimensions, degree by degree, of the isotypic piece of the tensor power
/// cut out by the given character: the rank of the averaged projector
/// `(1/n!) sum_s chi(s) M[s]` restricted to each total degree.
pub fn isotypic_dims(
    space: &GradedSpace,
    n: usize,
    character: Character,
    bound: usize,
) -> Result<GradedSpace, OracleError> {
    let basis = space.tensor_basis(n, bound)?;
    // Group basis tuples by total degree; the action preserves it, so the
    // projector is block diagonal.
    let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, tuple) in basis.iter().enumerate() {
        blocks.entry(total_degree(tuple)).or_default().push(i);
    }
    let perms = Permutation::all(n);
    let inv_factorial = {
        let mut f = rat(1);
        for k in 1..=n as i64 {
            f *= ratio(1, k);
        }
        f
    };
    let mut dims: Vec<(i64, usize)> = Vec::new();
    for (&degree, members) in &blocks {
        let local: BTreeMap<&[Label], usize> = members
            .iter()
            .enumerate()
            .map(|(loc, &gi)| (basis[gi].as_slice(), loc))
            .collect();
        let mut proj = QMatrix::zeros(members.len(), members.len());
        for (col, &gi) in members.iter().enumerate() {
            let tuple = &basis[gi];
            let degrees = degrees_of(tuple);
            for sigma in &perms {
                let sign = nu_sign(sigma, &degrees) * character.value(sigma);
                let image = permute_tuple(sigma, tuple);
                let row = local[image.as_slice()];
                proj.add_to(row, col, &(rat(sign) * &inv_factorial));
            }
        }
        let rank = proj.rank();
        if rank > 0 {
            dims.push((degree, rank));
        }
    }
    Ok(GradedSpace::from_dims(dims))
}

/// Sparse application of the signed action to a single basis tuple:
/// returns `(sign, image tuple)`.
pub fn apply_signed(sigma: &Permutation, tuple: &[Label]) -> (i64, Vec<Label>) {
    let degrees = degrees_of(tuple);
    (nu_sign(sigma, &degrees), permute_tuple(sigma, tuple))
}

/// A sparse vector in the tensor-power basis.
pub type SparseTensor = BTreeMap<Vec<Label>, Rat>;

/// Adds `c * tuple` into a sparse tensor, dropping cancellations.
pub fn sparse_add(v: &mut SparseTensor, tuple: Vec<Label>, c: Rat) {
    use num::traits::Zero;
    if c.is_zero() {
        return;
    }
    let slot = v.entry(tuple).or_insert_with(Rat::zero);
    *slot += c;
    if slot.is_zero() {
        v.retain(|_, value| !value.is_zero());
    }
}

/// The group-averaged symmetrization of a basis tuple under the given
/// character: `(1/n!) sum_s chi(s) s # tuple` as a sparse tensor.
pub fn symmetrize(tuple: &[Label], character: Character) -> SparseTensor {
    let n = tuple.len();
    let perms = Permutation::all(n);
    let mut inv_factorial = rat(1);
    for k in 1..=n as i64 {
        inv_factorial *= ratio(1, k);
    }
    let mut out = SparseTensor::new();
    for sigma in &perms {
        let (sign, image) = apply_signed(sigma, tuple);
        sparse_add(
            &mut out,
            image,
            rat(sign * character.value(sigma)) * &inv_factorial,
        );
    }
    out
}

/// Checks that projector ranks and the direct combinatorial count agree for
/// both characters, returning the first discrepancy as text.
pub fn check_invariant_dims(
    space: &GradedSpace,
    n: usize,
    bound: usize,
) -> Result<Option<String>, OracleError> {
    let tri = TriGradedDims::from_k_graded(
        space.degrees().map(|(&k, &d)| (k, d as u64)),
    );
    for character in [Character::Trivial, Character::Sign] {
        let by_rank = isotypic_dims(space, n, character, bound)?;
        let counted = match character {
            Character::Trivial => sym_wedge_dims(&tri, n),
            Character::Sign => sym_wedge_dims_sign(&tri, n),
        };
        let counted_graded = GradedSpace::from_dims(
            counted.k_dims().into_iter().map(|(k, d)| (k, d as usize)),
        );
        if by_rank != counted_graded {
            return Ok(Some(format!(
                "space {space}, n = {n}, character {character:?}: projector ranks {by_rank} \
                 vs direct count {counted_graded}"
            )));
        }
    }
    Ok(None)
}

/// Verifies `M[t] M[s] = M[s . t]` for every pair in `S_n`.
pub fn check_composition_law(
    space: &GradedSpace,
    n: usize,
    bound: usize,
) -> Result<Option<String>, OracleError> {
    let perms = Permutation::all(n);
    for s in &perms {
        let ms = tensor_action(space, n, s, bound)?;
        for t in &perms {
            let mt = tensor_action(space, n, t, bound)?;
            let st = s.compose(t);
            let mst = tensor_action(space, n, &st, bound)?;
            if (&mt * &ms) != mst {
                return Ok(Some(format!(
                    "space {space}, n = {n}: M[{t:?}] M[{s:?}] differs from M[{st:?}]"
                )));
            }
        }
    }
    Ok(None)
}

/// Verifies that the two averaged projectors are idempotent and kill each
/// other.
pub fn check_projectors(
    space: &GradedSpace,
    n: usize,
    bound: usize,
) -> Result<Option<String>, OracleError> {
    let perms = Permutation::all(n);
    let dim = space.dim().checked_pow(n as u32).unwrap_or(usize::MAX);
    if dim > bound {
        return Err(OracleError::DimensionBound {
            needed: dim as u128,
            bound,
        });
    }
    let mut inv_factorial = rat(1);
    for k in 1..=n as i64 {
        inv_factorial *= ratio(1, k);
    }
    let projector = |character: Character| -> Result<QMatrix, OracleError> {
        let mut p = QMatrix::zeros(dim, dim);
        for sigma in &perms {
            let m = tensor_action(space, n, sigma, bound)?;
            let weight = rat(character.value(sigma)) * &inv_factorial;
            for i in 0..dim {
                for j in 0..dim {
                    p.add_to(i, j, &(m.get(i, j) * &weight));
                }
            }
        }
        Ok(p)
    };
    let e_triv = projector(Character::Trivial)?;
    let e_sign = projector(Character::Sign)?;
    if (&e_triv * &e_triv) != e_triv || (&e_sign * &e_sign) != e_sign {
        return Ok(Some(format!(
            "space {space}, n = {n}: averaged projector is not idempotent"
        )));
    }
    // For n <= 1 the group is trivial, the two characters coincide, and the
    // projectors are both the identity; orthogonality starts at n = 2.
    if n >= 2 && (!(&e_triv * &e_sign).is_zero() || !(&e_sign * &e_triv).is_zero()) {
        return Ok(Some(format!(
            "space {space}, n = {n}: the two projectors do not annihilate each other"
        )));
    }
    // The trivial projector must also be fixed by every single action:
    // M[s] e_triv = e_triv.
    for sigma in &perms {
        let m = tensor_action(space, n, sigma, bound)?;
        if (&m * &e_triv) != e_triv {
            return Ok(Some(format!(
                "space {space}, n = {n}: M[{sigma:?}] does not fix the symmetrizer"
            )));
        }
    }
    Ok(None)
}

/// Verifies the square of the cocycle rule behind the composition law:
/// `nu(s . t, p) = nu(s, p) + nu(t, p . s) (mod 2)` for all pairs and all
/// parity patterns.
pub fn check_cocycle(n: usize) -> Option<String> {
    let perms = Permutation::all(n);
    for s in &perms {
        for t in &perms {
            for pattern in 0..(1u32 << n) {
                let degrees: Vec<i64> =
                    (0..n).map(|i| ((pattern >> i) & 1) as i64).collect();
                let lhs = super::perm::nu_exponent(&s.compose(t), &degrees);
                let moved = permuted_degrees(s, &degrees);
                let rhs =
                    (super::perm::nu_exponent(s, &degrees) + super::perm::nu_exponent(t, &moved)) % 2;
                if lhs != rhs {
                    return Some(format!(
                        "n = {n}, s = {:?}, t = {:?}, degrees = {degrees:?}: \
                         nu(s.t) = {lhs} but nu(s) + nu(t, p.s) = {rhs}",
                        s.images(),
                        t.images()
                    ));
                }
            }
        }
    }
    None
}

/// Verifies the five-term sign identity that makes the signed action
/// compatible with interchanging two blocks: for all `s` in `S_n` and all
/// parity patterns `p`, `q`,
///
/// ```text
/// nu(s, p + q) + sum_{i>j} p_{s(i)} q_{s(j)} + nu(s, q)
///     = sum_{i>j} p_i q_j + nu(s, p)   (mod 2).
/// ```
pub fn check_interchange_identity(n: usize) -> Option<String> {
    use super::perm::{interchange_exponent, nu_exponent};
    let perms = Permutation::all(n);
    for s in &perms {
        for p_pattern in 0..(1u32 << n) {
            let p: Vec<i64> = (0..n).map(|i| ((p_pattern >> i) & 1) as i64).collect();
            for q_pattern in 0..(1u32 << n) {
                let q: Vec<i64> = (0..n).map(|i| ((q_pattern >> i) & 1) as i64).collect();
                let sum: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
                let ps = permuted_degrees(s, &p);
                let qs = permuted_degrees(s, &q);
                let lhs =
                    (nu_exponent(s, &sum) + interchange_exponent(&ps, &qs) + nu_exponent(s, &q)) % 2;
                let rhs = (interchange_exponent(&p, &q) + nu_exponent(s, &p)) % 2;
                if lhs != rhs {
                    return Some(format!(
                        "n = {n}, s = {:?}, p = {p:?}, q = {q:?}: lhs = {lhs}, rhs = {rhs}",
                        s.images()
                    ));
                }
            }
        }
    }
    None
}
