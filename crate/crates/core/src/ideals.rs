//! Multilinear components of trace T-ideals.
//!
//! The degree-`n` component of the T-ideal generated by multilinear trace
//! polynomials is spanned by the elements
//!
//! ```text
//! T · u · f(m₁, …, m_d) · v           and
//! T · u · Tr(w_l · f(m₁, …, m_d) · w_r) · v
//! ```
//!
//! where the `mᵢ` are words on fresh variables or the unit, `u, v, w_l, w_r`
//! are words, `T` is a pure trace monomial, and all of `x_1 … x_n` is used
//! exactly once. Cyclicity folds `w_l` into `w_r` and centrality folds `u`
//! into `v` in the wrapped shape, so one word suffices there.
//!
//! The span is computed without enumerating every variable labelling: for
//! each block-size pattern one canonically-labelled instance is inserted,
//! and the span is then closed under the adjacent transpositions of the
//! variables. Relabelling is linear and every instance is a relabelling of a
//! canonical one, so the closure equals the full span.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::freetrace::{
    FreeTraceError, MtBasis, Permutation, TraceMonomial, TracePolynomial, DEFAULT_DEGREE_CAP,
};
use crate::linalg::{scale_to_int, IntBasis, Subspace};
use crate::rat::Rat;

/// Shape enumeration is the most explosive part of the system; consequences
/// above this degree fail loudly unless a larger cap is passed explicitly.
pub const DEFAULT_IDEAL_DEGREE_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    ZeroDegree,
    DegreeCapExceeded { n: usize, cap: usize },
    BadGenerator { name: String, source: FreeTraceError },
    DegreeMismatch { expected: usize, got: usize },
}

impl core::fmt::Display for IdealError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            IdealError::ZeroDegree => write!(f, "degree must be at least 1"),
            IdealError::DegreeCapExceeded { n, cap } => write!(f, "degree {n} above cap {cap}"),
            IdealError::BadGenerator { name, source } => {
                write!(f, "generator {name}: {source}")
            }
            IdealError::DegreeMismatch { expected, got } => {
                write!(f, "polynomial degree {got} does not match component degree {expected}")
            }
        }
    }
}

/// Named multilinear generators; generator `f` of degree `d` must be
/// multilinear in exactly `x_1 … x_d`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    items: Vec<(String, TracePolynomial)>,
}

impl GeneratorSet {
    pub fn new(items: Vec<(String, TracePolynomial)>) -> Result<Self, IdealError> {
        for (name, poly) in &items {
            let d = poly.degree();
            let expected: alloc::collections::BTreeSet<usize> = (1..=d).collect();
            if poly.vars() != &expected {
                return Err(IdealError::BadGenerator {
                    name: name.clone(),
                    source: FreeTraceError::VariableSetMismatch,
                });
            }
        }
        Ok(GeneratorSet { items })
    }

    pub fn items(&self) -> &[(String, TracePolynomial)] {
        &self.items
    }

    pub fn names(&self) -> Vec<String> {
        self.items.iter().map(|(n, _)| n.clone()).collect()
    }
}

/// The degree-`n` piece of a trace T-ideal (or of an identity ideal), as a
/// subspace of the `MT_n` coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealComponent {
    degree: usize,
    subspace: Subspace,
    provenance: Vec<String>,
}

impl IdealComponent {
    pub fn new(degree: usize, subspace: Subspace, provenance: Vec<String>) -> Self {
        IdealComponent {
            degree,
            subspace,
            provenance,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    /// `dim MT_n − dim(self)`: the codimension of the component.
    pub fn quotient_dimension(&self) -> usize {
        self.subspace.ambient_dim() - self.subspace.dim()
    }

    /// Exact membership of a multilinear polynomial of the same degree.
    pub fn contains(&self, f: &TracePolynomial) -> Result<bool, IdealError> {
        if f.degree() != self.degree {
            return Err(IdealError::DegreeMismatch {
                expected: self.degree,
                got: f.degree(),
            });
        }
        let basis = MtBasis::new_capped(self.degree, self.degree).expect("within cap");
        let v = basis
            .coeff_vector(f)
            .map_err(|source| IdealError::BadGenerator {
                name: String::from("membership query"),
                source,
            })?;
        Ok(self.subspace.contains(&v).expect("matching ambient"))
    }

    /// Stability under the variable-permuting action, checked on the
    /// adjacent transpositions.
    pub fn is_sn_stable(&self) -> bool {
        let basis = MtBasis::new_capped(self.degree, self.degree).expect("within cap");
        for k in 1..self.degree {
            let action = basis.permutation_action(&Permutation::transposition(self.degree, k, k + 1));
            for row in self.subspace.basis().row_vecs() {
                let image = permute_rat(row, &action);
                if !self.subspace.contains(&image).expect("matching ambient") {
                    return false;
                }
            }
        }
        true
    }
}

/// The degree-`n` multilinear component of the trace T-ideal generated by
/// `generators`, with the default degree cap.
pub fn consequences_multilinear(
    generators: &GeneratorSet,
    n: usize,
) -> Result<IdealComponent, IdealError> {
    consequences_multilinear_capped(generators, n, DEFAULT_IDEAL_DEGREE_CAP)
}

/// As [`consequences_multilinear`] with an explicit degree cap.
pub fn consequences_multilinear_capped(
    generators: &GeneratorSet,
    n: usize,
    cap: usize,
) -> Result<IdealComponent, IdealError> {
    if n == 0 {
        return Err(IdealError::ZeroDegree);
    }
    if n > cap {
        return Err(IdealError::DegreeCapExceeded { n, cap });
    }
    let basis =
        MtBasis::new_capped(n, cap.max(DEFAULT_DEGREE_CAP)).expect("degree within raised cap");
    let mut engine = IntBasis::new(basis.dim());
    let mut queue: Vec<Vec<BigInt>> = Vec::new();

    for (_, f) in generators.items() {
        for seed in seed_instances(f, n, &basis) {
            queue.push(seed);
        }
    }

    let actions: Vec<Vec<usize>> = (1..n)
        .map(|k| basis.permutation_action(&Permutation::transposition(n, k, k + 1)))
        .collect();

    while let Some(v) = queue.pop() {
        if engine.insert(v.clone()) {
            for action in &actions {
                queue.push(permute_int(&v, action));
            }
        }
    }

    let subspace = Subspace::from_int_basis(engine);
    Ok(IdealComponent::new(n, subspace, generators.names()))
}

/// One canonically-labelled spanning instance per block-size pattern.
fn seed_instances(f: &TracePolynomial, n: usize, basis: &MtBasis) -> Vec<Vec<BigInt>> {
    let d = f.degree();
    let mut seeds = Vec::new();
    // blocks: m_1 … m_d, two outer words, traced remainder
    for composition in compositions(n, d + 3) {
        let (m_sizes, rest) = composition.split_at(d);
        let (first, second, t) = (rest[0], rest[1], rest[2]);

        let mut next = 1;
        let mut take = |len: usize| -> Vec<usize> {
            let block: Vec<usize> = (next..next + len).collect();
            next += len;
            block
        };
        let m_blocks: Vec<Vec<usize>> = m_sizes.iter().map(|&s| take(s)).collect();
        let first_block = take(first);
        let second_block = take(second);
        let t_start = next;

        let mut assignment = BTreeMap::new();
        for (i, block) in m_blocks.iter().enumerate() {
            let image = TraceMonomial::from_word(block.clone()).expect("fresh labels");
            assignment.insert(i + 1, image);
        }
        let substituted = match f.substitute(&assignment) {
            Ok(p) => p,
            Err(FreeTraceError::EmptyTraceFactor) => continue,
            Err(e) => unreachable!("substitution with fresh words cannot fail otherwise: {e:?}"),
        };

        for lambda in partitions(t) {
            let mut pos = t_start;
            let mut t_factors = Vec::with_capacity(lambda.len());
            for part in &lambda {
                t_factors.push((pos..pos + part).collect::<Vec<usize>>());
                pos += part;
            }

            // plain shape: T · first · f(m) · second
            if let Ok(poly) = substituted.mul_monomial(&first_block, &second_block, &t_factors) {
                seeds.push(coeff_ints(basis, &poly));
            }

            // wrapped shape: T · Tr(f(m) · first) · second
            match substituted.trace_wrap(&first_block) {
                Ok(wrapped) => {
                    let poly = wrapped
                        .mul_monomial(&second_block, &[], &t_factors)
                        .expect("fresh labels");
                    seeds.push(coeff_ints(basis, &poly));
                }
                Err(FreeTraceError::EmptyTraceFactor) => {}
                Err(e) => unreachable!("trace wrap with fresh labels cannot fail otherwise: {e:?}"),
            }
        }
    }
    seeds
}

fn coeff_ints(basis: &MtBasis, poly: &TracePolynomial) -> Vec<BigInt> {
    let v = basis.coeff_vector(poly).expect("instance uses 1..n");
    scale_to_int(&v)
}

fn permute_int(v: &[BigInt], action: &[usize]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); v.len()];
    for (i, value) in v.iter().enumerate() {
        out[action[i]] = value.clone();
    }
    out
}

fn permute_rat(v: &[Rat], action: &[usize]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); v.len()];
    for (i, value) in v.iter().enumerate() {
        out[action[i]] = value.clone();
    }
    out
}

/// Ordered decompositions of `n` into `k` nonnegative parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for take in 0..=remaining {
            current.push(take);
            go(remaining - take, slots - 1, current, out);
            current.pop();
        }
    }
    go(n, k, &mut current, &mut out);
    out
}

/// Integer partitions of `n` as non-increasing part lists; `[]` for `n = 0`.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    go(n, n, &mut current, &mut out);
    out
}
