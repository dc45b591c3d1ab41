//! Enumeration and coordinatization of the spaces `MT_n` and `PT_n`.
//!
//! `MT_n` has dimension `(n+1)!` and `PT_n` dimension `n!`. Enumeration
//! order is pinned so that coordinate vectors are stable across runs: word
//! subsets in lexicographic order, word arrangements in lexicographic order,
//! then cyclic partitions of the traced variables in the lexicographic order
//! of the permutations they come from.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rat::Rat;

use super::monomial::{canonicalize, TraceMonomial};
use super::perm::{next_permutation, Permutation};
use super::poly::TracePolynomial;
use super::FreeTraceError;

/// Factorial growth makes high degrees explosive; enumeration fails loudly
/// above this unless a larger cap is passed explicitly.
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// All canonical multilinear trace monomials on `x_1 … x_n`, in the pinned
/// enumeration order; `(n+1)!` of them.
pub fn enumerate_mt_basis(n: usize) -> Result<Vec<TraceMonomial>, FreeTraceError> {
    enumerate_mt_basis_capped(n, DEFAULT_DEGREE_CAP)
}

/// As [`enumerate_mt_basis`] with an explicit degree cap.
pub fn enumerate_mt_basis_capped(
    n: usize,
    cap: usize,
) -> Result<Vec<TraceMonomial>, FreeTraceError> {
    if n > cap {
        return Err(FreeTraceError::DegreeCapExceeded { n, cap });
    }
    let mut out = Vec::with_capacity(factorial(n + 1));
    for subset in subsets_lex(n) {
        let complement: Vec<usize> = (1..=n).filter(|v| !subset.contains(v)).collect();
        for word in arrangements_lex(&subset) {
            for factors in cyclic_partitions(&complement) {
                out.push(
                    canonicalize(word.clone(), factors)
                        .expect("enumeration produces multilinear monomials"),
                );
            }
        }
    }
    debug_assert_eq!(out.len(), factorial(n + 1));
    Ok(out)
}

/// All canonical pure trace monomials on `x_1 … x_n`; `n!` of them.
pub fn enumerate_pt_basis(n: usize) -> Result<Vec<TraceMonomial>, FreeTraceError> {
    if n == 0 {
        return Err(FreeTraceError::ZeroDegree);
    }
    if n > DEFAULT_DEGREE_CAP {
        return Err(FreeTraceError::DegreeCapExceeded {
            n,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    let all: Vec<usize> = (1..=n).collect();
    Ok(cyclic_partitions(&all)
        .into_iter()
        .map(|factors| canonicalize(Vec::new(), factors).expect("multilinear"))
        .collect())
}

/// The linear isomorphism `PT_{n+1} → MT_n`: in each pure monomial the
/// factor containing the top variable is rotated so that variable comes
/// last, then its trace is removed together with the trailing variable,
/// leaving the factor's remainder as the word part.
pub fn pt_to_mt_iso(p: &TracePolynomial) -> Result<TracePolynomial, FreeTraceError> {
    let top = *p.vars().iter().next_back().ok_or(FreeTraceError::ZeroDegree)?;
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        if !m.is_pure() {
            return Err(FreeTraceError::NotPure);
        }
        let mut word = Vec::new();
        let mut factors = Vec::new();
        for factor in m.trace_factors() {
            match factor.iter().position(|&v| v == top) {
                Some(pos) => {
                    // cyclic order after `top`, excluding it
                    word.extend_from_slice(&factor[pos + 1..]);
                    word.extend_from_slice(&factor[..pos]);
                }
                None => factors.push(factor.clone()),
            }
        }
        terms.push((canonicalize(word, factors)?, c.clone()));
    }
    let vars = p.vars().iter().copied().filter(|&v| v != top).collect();
    TracePolynomial::from_terms(vars, terms)
}

/// The basis of `MT_n` with its index map: the coordinate system used by
/// evaluation matrices, identity subspaces and ideal components.
#[derive(Debug, Clone)]
pub struct MtBasis {
    n: usize,
    monomials: Vec<TraceMonomial>,
    index: BTreeMap<TraceMonomial, usize>,
}

impl MtBasis {
    pub fn new(n: usize) -> Result<Self, FreeTraceError> {
        Self::new_capped(n, DEFAULT_DEGREE_CAP)
    }

    pub fn new_capped(n: usize, cap: usize) -> Result<Self, FreeTraceError> {
        let monomials = enumerate_mt_basis_capped(n, cap)?;
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(MtBasis {
            n,
            monomials,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[TraceMonomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &TraceMonomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &TraceMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coordinate vector of a polynomial multilinear in `x_1 … x_n`.
    pub fn coeff_vector(&self, p: &TracePolynomial) -> Result<Vec<Rat>, FreeTraceError> {
        let expected: alloc::collections::BTreeSet<usize> = (1..=self.n).collect();
        if p.vars() != &expected {
            return Err(FreeTraceError::VariableSetMismatch);
        }
        let mut v = vec![Rat::zero(); self.dim()];
        for (m, c) in p.terms() {
            let i = self.index_of(m).ok_or(FreeTraceError::VariableSetMismatch)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Polynomial from a dense coordinate vector.
    pub fn polynomial(&self, v: &[Rat]) -> TracePolynomial {
        let vars = (1..=self.n).collect();
        TracePolynomial::from_terms(
            vars,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monomials[i].clone(), c.clone())),
        )
        .expect("basis monomials are multilinear in 1..n")
    }

    /// Index permutation of the variable-relabelling action: entry `i` is
    /// the index of `σ · monomial_i`.
    pub fn permutation_action(&self, sigma: &Permutation) -> Vec<usize> {
        self.monomials
            .iter()
            .map(|m| {
                let image = m.relabel(|v| sigma.apply(v)).expect("bijection");
                self.index_of(&image).expect("action preserves the basis")
            })
            .collect()
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Subsets of `{1..n}` as sorted vectors, in lexicographic order
/// (`[] < [1] < [1,2] < … < [1,n] < [2] < …`).
fn subsets_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << n);
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        out.push(cur.clone());
        let start = cur.last().map_or(1, |&l| l + 1);
        // push in reverse so the smallest extension pops first
        for v in (start..=n).rev() {
            let mut next = cur.clone();
            next.push(v);
            stack.push(next);
        }
    }
    out
}

/// All arrangements of a sorted set, lexicographically.
fn arrangements_lex(set: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = set.to_vec();
    let mut out = Vec::with_capacity(factorial(set.len()));
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            return out;
        }
    }
}

/// All partitions of a set into cyclically-ordered factors, i.e. the cycle
/// decompositions of all permutations of the set, in the lexicographic order
/// of those permutations. Distinct permutations give distinct factor lists.
fn cyclic_partitions(set: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if set.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(factorial(set.len()));
    // one-line images over `set`, as positions into `set`
    let k = set.len();
    let mut images: Vec<usize> = (0..k).collect();
    loop {
        let mut visited = vec![false; k];
        let mut factors = Vec::new();
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cycle.push(set[cur]);
                cur = images[cur];
            }
            factors.push(cycle);
        }
        out.push(factors);
        let mut one_based: Vec<usize> = images.iter().map(|&i| i + 1).collect();
        if !next_permutation(&mut one_based) {
            return out;
        }
        images = one_based.into_iter().map(|i| i - 1).collect();
    }
}
