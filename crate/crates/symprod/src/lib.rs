//! Exact-arithmetic generating series for symmetric products of graded
//! data, together with brute-force oracles that verify every closed form.
//!
//! The library has three layers:
//!
//! * [`ring`] and [`linalg`]: sparse Laurent polynomials in `y`, `x`, `z`
//!   over the rationals, truncated power series in `t` over them, and exact
//!   rational matrices with rank and signature.
//! * [`hodge`], [`macdonald`], [`pairing`]: the closed forms. Tables of
//!   refined Hodge numbers and their specializations, the master product
//!   formula for the series of symmetric products, and the two-line
//!   signature series of a graded pairing.
//! * [`oracle`] and [`verify`]: an independent model of signed permutation
//!   actions on tensor powers (projectors, chain maps, Künneth), plus named
//!   suites that sweep each identity over input libraries and report the
//!   first counterexample.
//!
//! All arithmetic is exact; equality of series means equality of every
//! coefficient, not agreement within a tolerance.

pub mod hodge;
pub mod linalg;
pub mod macdonald;
pub mod oracle;
pub mod pairing;
pub mod ring;
pub mod verify;
