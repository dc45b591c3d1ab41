//! Exact computation with trace polynomial identities of finite-dimensional
//! unital associative algebras over the rationals.
//!
//! The crate is organised around five building blocks:
//!
//! - [`linalg`]: dense exact rational linear algebra (row reduction, rank,
//!   kernels, subspaces) with a fraction-free integer elimination core;
//! - [`freetrace`]: the multilinear combinatorics of the free algebra with
//!   trace (canonical trace monomials, the mixed and pure trace spaces,
//!   permutation-indexed monomials, substitution endomorphisms);
//! - [`algebra`]: finite-dimensional unital algebras with a trace functional,
//!   given by structure constants, together with structural analyses
//!   (trace space, degeneracy, radical, trace-ideals, quotients);
//! - [`ideals`]: multilinear components of trace T-ideals generated by finite
//!   sets of trace polynomials;
//! - [`evalcodim`]: evaluation of trace polynomials on algebras, identity
//!   testing, trace codimensions and T-ideal comparison.
//!
//! Everything is exact: the scalar type is an arbitrary-precision rational.
//! The crate is `no_std` (with `alloc`); IO, parsing and the command line
//! front end live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod evalcodim;
pub mod freetrace;
pub mod ideals;
pub mod linalg;
pub mod rat;

pub use rat::Rat;
