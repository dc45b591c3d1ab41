//! Evaluation of trace polynomials on trace algebras, identity testing,
//! trace codimensions and T-ideal comparison.
//!
//! A multilinear polynomial vanishes on an algebra iff it vanishes on every
//! tuple of basis elements, so identity testing enumerates the `dimⁿ` basis
//! tuples and codimensions come out of the rank of the evaluation matrix.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::TraceAlgebra;
use crate::freetrace::{FreeTraceError, MtBasis, TraceMonomial, TracePolynomial};
use crate::ideals::IdealComponent;
use crate::linalg::Matrix;
use crate::rat::Rat;

/// Refuse to build evaluation matrices with more entries than this unless an
/// explicit budget is passed.
pub const DEFAULT_ENTRY_BUDGET: usize = 10_000_000;

/// Maps each variable index to an element, given by its coordinate vector.
pub type Assignment = BTreeMap<usize, Vec<Rat>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    UncoveredVariable(usize),
    ElementDimMismatch { expected: usize, got: usize },
    BudgetExceeded { entries: usize, budget: usize },
    FreeTrace(FreeTraceError),
}

impl core::fmt::Display for EvalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EvalError::UncoveredVariable(v) => write!(f, "no value assigned to x{v}"),
            EvalError::ElementDimMismatch { expected, got } => {
                write!(f, "element has {got} coordinates, algebra has dimension {expected}")
            }
            EvalError::BudgetExceeded { entries, budget } => {
                write!(f, "evaluation matrix needs {entries} entries, budget is {budget}")
            }
            EvalError::FreeTrace(e) => write!(f, "{e}"),
        }
    }
}

impl From<FreeTraceError> for EvalError {
    fn from(e: FreeTraceError) -> Self {
        EvalError::FreeTrace(e)
    }
}

fn word_product(algebra: &TraceAlgebra, word: &[usize], asg: &Assignment) -> Vec<Rat> {
    let mut acc = algebra.unit().to_vec();
    for v in word {
        acc = algebra.mul(&acc, &asg[v]);
    }
    acc
}

fn eval_monomial(algebra: &TraceAlgebra, m: &TraceMonomial, asg: &Assignment) -> Vec<Rat> {
    let mut scalar = Rat::one();
    for factor in m.trace_factors() {
        scalar *= algebra.trace_of(&word_product(algebra, factor, asg));
        if scalar.is_zero() {
            return vec![Rat::zero(); algebra.dim()];
        }
    }
    let vector = word_product(algebra, m.word(), asg);
    algebra.scale(&scalar, &vector)
}

/// Evaluates `f` with the formal trace interpreted as the algebra's trace.
pub fn evaluate(
    f: &TracePolynomial,
    algebra: &TraceAlgebra,
    asg: &Assignment,
) -> Result<Vec<Rat>, EvalError> {
    for v in f.vars() {
        let value = asg.get(v).ok_or(EvalError::UncoveredVariable(*v))?;
        if value.len() != algebra.dim() {
            return Err(EvalError::ElementDimMismatch {
                expected: algebra.dim(),
                got: value.len(),
            });
        }
    }
    let mut out = vec![Rat::zero(); algebra.dim()];
    for (m, c) in f.terms() {
        let value = eval_monomial(algebra, m, asg);
        for (o, x) in out.iter_mut().zip(value) {
            *o += c * &x;
        }
    }
    Ok(out)
}

/// Lexicographic enumeration of the `dimⁿ` tuples of basis indices.
struct TupleIter {
    dim: usize,
    current: Vec<usize>,
    done: bool,
}

impl TupleIter {
    fn new(dim: usize, n: usize) -> Self {
        TupleIter {
            dim,
            current: vec![0; n],
            done: dim == 0 && n > 0,
        }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = true;
        for slot in self.current.iter_mut().rev() {
            *slot += 1;
            if *slot < self.dim {
                self.done = false;
                break;
            }
            *slot = 0;
        }
        Some(out)
    }
}

fn assignment_for(algebra: &TraceAlgebra, vars: &[usize], tuple: &[usize]) -> Assignment {
    vars.iter()
        .zip(tuple)
        .map(|(&v, &t)| (v, algebra.basis_element(t)))
        .collect()
}

/// True iff `f` vanishes on every tuple of basis elements (equivalently, by
/// multilinearity, on every substitution).
pub fn is_identity(f: &TracePolynomial, algebra: &TraceAlgebra) -> bool {
    let vars: Vec<usize> = f.vars().iter().copied().collect();
    for tuple in TupleIter::new(algebra.dim(), vars.len()) {
        let asg = assignment_for(algebra, &vars, &tuple);
        let value = evaluate(f, algebra, &asg).expect("assignment covers all variables");
        if value.iter().any(|c| !c.is_zero()) {
            return false;
        }
    }
    true
}

/// The evaluation matrix of `MT_n` on an algebra: rows indexed by the basis
/// monomials of `MT_n`, columns by (basis tuple, output coordinate) pairs
/// with the tuple varying lexicographically and the coordinate fastest.
pub struct EvaluationMatrix {
    degree: usize,
    matrix: Matrix,
}

impl EvaluationMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// Builds the evaluation matrix within the default entry budget.
pub fn evaluation_matrix(n: usize, algebra: &TraceAlgebra) -> Result<EvaluationMatrix, EvalError> {
    evaluation_matrix_with_budget(n, algebra, DEFAULT_ENTRY_BUDGET)
}

/// As [`evaluation_matrix`] with an explicit entry budget.
pub fn evaluation_matrix_with_budget(
    n: usize,
    algebra: &TraceAlgebra,
    budget: usize,
) -> Result<EvaluationMatrix, EvalError> {
    let basis = MtBasis::new(n)?;
    let dim = algebra.dim();
    let tuples = dim.checked_pow(n as u32).unwrap_or(usize::MAX);
    let entries = basis
        .dim()
        .checked_mul(tuples)
        .and_then(|v| v.checked_mul(dim))
        .unwrap_or(usize::MAX);
    if entries > budget {
        return Err(EvalError::BudgetExceeded { entries, budget });
    }
    let vars: Vec<usize> = (1..=n).collect();
    let mut rows: Vec<Vec<Rat>> = vec![Vec::with_capacity(tuples * dim); basis.dim()];
    for tuple in TupleIter::new(dim, n) {
        let asg = assignment_for(algebra, &vars, &tuple);
        // evaluations of whole words are shared between monomials of this
        // tuple's column block
        let mut word_cache: BTreeMap<&[usize], Vec<Rat>> = BTreeMap::new();
        let mut trace_cache: BTreeMap<&[usize], Rat> = BTreeMap::new();
        for (row, monomial) in rows.iter_mut().zip(basis.monomials()) {
            let mut scalar = Rat::one();
            for factor in monomial.trace_factors() {
                let t = trace_cache.entry(factor.as_slice()).or_insert_with(|| {
                    algebra.trace_of(&word_product(algebra, factor, &asg))
                });
                scalar *= &*t;
                if scalar.is_zero() {
                    break;
                }
            }
            if scalar.is_zero() {
                row.extend(core::iter::repeat_n(Rat::zero(), dim));
                continue;
            }
            let vector = word_cache
                .entry(monomial.word())
                .or_insert_with(|| word_product(algebra, monomial.word(), &asg));
            if scalar.is_one() {
                row.extend(vector.iter().cloned());
            } else {
                row.extend(vector.iter().map(|x| &scalar * x));
            }
        }
    }
    Ok(EvaluationMatrix {
        degree: n,
        matrix: Matrix::from_rows(rows),
    })
}

/// `c_n^{tr}`: the rank of the evaluation matrix, i.e. the dimension of
/// `MT_n` modulo the degree-`n` identities.
pub fn trace_codimension(n: usize, algebra: &TraceAlgebra) -> Result<usize, EvalError> {
    Ok(evaluation_matrix(n, algebra)?.matrix().rank())
}

/// `[c_1^{tr}, …, c_{n_max}^{tr}]`.
pub fn codim_sequence(algebra: &TraceAlgebra, n_max: usize) -> Result<Vec<usize>, EvalError> {
    (1..=n_max).map(|n| trace_codimension(n, algebra)).collect()
}

/// The degree-`n` identities of the algebra: coefficient vectors vanishing
/// on every basis tuple, i.e. the kernel of the transposed evaluation
/// matrix.
pub fn identities_subspace(
    n: usize,
    algebra: &TraceAlgebra,
) -> Result<IdealComponent, EvalError> {
    let e = evaluation_matrix(n, algebra)?;
    let kernel = e.matrix().transpose().kernel();
    let mut provenance = String::from("identities of ");
    provenance.push_str(&algebra.basis_labels().join(","));
    Ok(IdealComponent::new(n, kernel, vec![provenance]))
}

/// `Id^tr(a) ∩ MT_n ⊆ Id^tr(b) ∩ MT_n`.
pub fn tideal_leq(a: &TraceAlgebra, b: &TraceAlgebra, n: usize) -> Result<bool, EvalError> {
    let ia = identities_subspace(n, a)?;
    let ib = identities_subspace(n, b)?;
    Ok(ia
        .subspace()
        .leq(ib.subspace())
        .expect("same ambient dimension"))
}

/// A certified non-inclusion: a polynomial in `Id^tr(a) ∩ MT_n` together
/// with a basis tuple of `b` on which it does not vanish.
#[derive(Debug, Clone)]
pub struct SeparationWitness {
    /// An identity of `a` that is not an identity of `b`.
    pub polynomial: TracePolynomial,
    /// Basis indices for `x_1 … x_n`: the lexicographically first tuple of
    /// `b`'s basis elements where the polynomial evaluates nonzero.
    pub tuple: Vec<usize>,
    /// The nonzero value at that tuple.
    pub value: Vec<Rat>,
}

/// Searches for a witness that `Id^tr(a) ∩ MT_n ⊄ Id^tr(b) ∩ MT_n`: the
/// kernel-basis polynomial of lowest index that fails on `b`, with the first
/// tuple certifying the failure. `None` when inclusion holds at degree `n`.
pub fn find_separating_identity(
    a: &TraceAlgebra,
    b: &TraceAlgebra,
    n: usize,
) -> Result<Option<SeparationWitness>, EvalError> {
    let ia = identities_subspace(n, a)?;
    let ib = identities_subspace(n, b)?;
    let basis = MtBasis::new(n)?;
    for row in ia.subspace().basis().row_vecs() {
        if ib.subspace().contains(row).expect("same ambient") {
            continue;
        }
        let polynomial = basis.polynomial(row);
        let vars: Vec<usize> = (1..=n).collect();
        for tuple in TupleIter::new(b.dim(), n) {
            let asg = assignment_for(b, &vars, &tuple);
            let value = evaluate(&polynomial, b, &asg)?;
            if value.iter().any(|c| !c.is_zero()) {
                return Ok(Some(SeparationWitness {
                    polynomial,
                    tuple,
                    value,
                }));
            }
        }
        unreachable!("a non-identity must fail on some basis tuple");
    }
    Ok(None)
}
