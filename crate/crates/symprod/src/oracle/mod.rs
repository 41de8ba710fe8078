//! Brute-force oracle: explicit signed permutation actions on tensor
//! powers, finite complexes, and the sign identities that hold them
//! together. Everything here works basis vector by basis vector with exact
//! arithmetic, so it independently validates the closed-form series
//! elsewhere in the crate.

mod action;
mod complex;
mod identities;
mod perm;
mod space;

pub use action::{
    apply_signed, check_cocycle, check_composition_law, check_interchange_identity,
    check_invariant_dims, check_projectors, isotypic_dims, permute_tuple, sparse_add, symmetrize,
    tensor_action, Character, SparseTensor,
};
pub use complex::{
    kunneth_check, random_complex, random_unimodular, tensor_complex, ComplexError, FiniteComplex,
};
pub use identities::{apply_tensor_differential, chain_map_commutes, two_degree_complexes};
pub use perm::{
    interchange_exponent, nu_exponent, nu_sign, permuted_degrees, PermError, Permutation,
};
pub use space::{degrees_of, total_degree, GradedSpace, Label, OracleError, DEFAULT_DIM_BOUND};
