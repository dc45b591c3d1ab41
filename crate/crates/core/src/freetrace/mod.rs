//! The multilinear part of the free algebra with trace.
//!
//! A trace monomial is a word in the variables together with a multiset of
//! cyclic trace words; the relations `Tr(MN) = Tr(NM)` and
//! `Tr(Tr(M)N) = Tr(M)Tr(N)` are normalised away by storing every trace
//! factor in its canonical cyclic rotation and sorting the factors. `Tr` of
//! the empty word does not exist in this model: operations that would create
//! one fail instead.

mod basis;
mod generators;
mod monomial;
mod perm;
mod poly;

pub use basis::{
    enumerate_mt_basis, enumerate_mt_basis_capped, enumerate_pt_basis, pt_to_mt_iso, MtBasis,
    DEFAULT_DEGREE_CAP,
};
pub use generators::{
    builtin_polynomials, c2_bilinear, c2_cubic, cayley_hamilton, commutator, commutator_product,
    single_trace, trace_exchange, trace_mult, trace_shift_product, triple_trace_reduction,
};
pub use monomial::{canonicalize, TraceMonomial};
pub use perm::{mtr_from_permutation, ptr_from_permutation, Permutation};
pub use poly::TracePolynomial;

/// Errors from constructing or transforming trace monomials and polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeTraceError {
    /// A variable occurs more than once in a would-be multilinear monomial.
    RepeatedVariable(usize),
    /// An operation would produce `Tr` of the empty word.
    EmptyTraceFactor,
    /// Monomial variable set differs from the polynomial's declared set.
    VariableSetMismatch,
    /// Two polynomials (or substitution images) share variables.
    VariableOverlap(usize),
    /// A substitution does not cover this variable.
    UnassignedVariable(usize),
    /// Operation requires a pure trace polynomial.
    NotPure,
    /// Enumeration degree above the configured cap.
    DegreeCapExceeded { n: usize, cap: usize },
    /// Degree must be positive.
    ZeroDegree,
    /// Permutation images are not a bijection on 1..n.
    NotBijective,
}

impl core::fmt::Display for FreeTraceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FreeTraceError::RepeatedVariable(v) => write!(f, "variable x{v} occurs twice"),
            FreeTraceError::EmptyTraceFactor => write!(f, "trace of the empty word"),
            FreeTraceError::VariableSetMismatch => {
                write!(f, "monomial variables differ from the declared variable set")
            }
            FreeTraceError::VariableOverlap(v) => {
                write!(f, "variable x{v} used by more than one operand")
            }
            FreeTraceError::UnassignedVariable(v) => write!(f, "variable x{v} not assigned"),
            FreeTraceError::NotPure => write!(f, "polynomial has a monomial with a word part"),
            FreeTraceError::DegreeCapExceeded { n, cap } => {
                write!(f, "degree {n} above cap {cap}")
            }
            FreeTraceError::ZeroDegree => write!(f, "degree must be at least 1"),
            FreeTraceError::NotBijective => write!(f, "images are not a bijection"),
        }
    }
}
