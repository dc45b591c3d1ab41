//! Multilinear trace polynomials and their operations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rat::{format_rat, Rat};

use super::monomial::{canonicalize, TraceMonomial};
use super::FreeTraceError;

/// A finite rational linear combination of canonical trace monomials, all
/// multilinear in the same declared variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePolynomial {
    vars: BTreeSet<usize>,
    terms: BTreeMap<TraceMonomial, Rat>,
}

impl TracePolynomial {
    /// The zero polynomial, multilinear in `vars` by convention.
    pub fn zero(vars: BTreeSet<usize>) -> Self {
        TracePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// A single monomial with coefficient `coeff`; the variable set is the
    /// monomial's own.
    pub fn from_monomial(monomial: TraceMonomial, coeff: Rat) -> Self {
        let vars = monomial.variables();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        TracePolynomial { vars, terms }
    }

    /// Builds a polynomial from term pairs. All monomials must be multilinear
    /// in exactly `vars`; like terms are combined and zeros dropped.
    pub fn from_terms(
        vars: BTreeSet<usize>,
        term_list: impl IntoIterator<Item = (TraceMonomial, Rat)>,
    ) -> Result<Self, FreeTraceError> {
        let mut terms: BTreeMap<TraceMonomial, Rat> = BTreeMap::new();
        for (monomial, coeff) in term_list {
            if monomial.variables() != vars {
                return Err(FreeTraceError::VariableSetMismatch);
            }
            let entry = terms.entry(monomial).or_insert_with(Rat::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TracePolynomial { vars, terms })
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, monomial: &TraceMonomial) -> Rat {
        self.terms.get(monomial).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum; both operands must be multilinear in the same variable set.
    pub fn add(&self, other: &TracePolynomial) -> Result<TracePolynomial, FreeTraceError> {
        if self.vars != other.vars {
            return Err(FreeTraceError::VariableSetMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TracePolynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn scale(&self, factor: &Rat) -> TracePolynomial {
        if factor.is_zero() {
            return TracePolynomial::zero(self.vars.clone());
        }
        TracePolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn neg(&self) -> TracePolynomial {
        TracePolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// `left · self · right` with extra central trace factors adjoined.
    /// The new material must be disjoint from the polynomial's variables.
    pub fn mul_monomial(
        &self,
        left: &[usize],
        right: &[usize],
        extra_factors: &[Vec<usize>],
    ) -> Result<TracePolynomial, FreeTraceError> {
        let mut vars = self.vars.clone();
        for &v in left
            .iter()
            .chain(right.iter())
            .chain(extra_factors.iter().flatten())
        {
            if !vars.insert(v) {
                return Err(FreeTraceError::VariableOverlap(v));
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut word = Vec::with_capacity(left.len() + m.word().len() + right.len());
            word.extend_from_slice(left);
            word.extend_from_slice(m.word());
            word.extend_from_slice(right);
            let mut factors: Vec<Vec<usize>> = m.trace_factors().to_vec();
            factors.extend(extra_factors.iter().cloned());
            terms.push((canonicalize(word, factors)?, c.clone()));
        }
        TracePolynomial::from_terms(vars, terms)
    }

    /// `Tr(self · tail)`: wraps each term's word, extended by `tail`, in a
    /// trace; the term's existing trace factors stay outside (centrality).
    /// Fails with [`FreeTraceError::EmptyTraceFactor`] if some term has an
    /// empty word and `tail` is empty.
    pub fn trace_wrap(&self, tail: &[usize]) -> Result<TracePolynomial, FreeTraceError> {
        let mut vars = self.vars.clone();
        for &v in tail {
            if !vars.insert(v) {
                return Err(FreeTraceError::VariableOverlap(v));
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut wrapped = Vec::with_capacity(m.word().len() + tail.len());
            wrapped.extend_from_slice(m.word());
            wrapped.extend_from_slice(tail);
            let mut factors: Vec<Vec<usize>> = m.trace_factors().to_vec();
            factors.push(wrapped);
            terms.push((canonicalize(Vec::new(), factors)?, c.clone()));
        }
        TracePolynomial::from_terms(vars, terms)
    }

    /// Simultaneous substitution of monomials (or the unit) for variables.
    ///
    /// Every variable of the polynomial must be assigned, and the images must
    /// use pairwise disjoint variable sets. Trace factors of an image are
    /// central and float to the top level; splicing an image into a trace
    /// factor whose word would become empty is an error.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, TraceMonomial>,
    ) -> Result<TracePolynomial, FreeTraceError> {
        let mut vars = BTreeSet::new();
        for v in &self.vars {
            let image = assignment
                .get(v)
                .ok_or(FreeTraceError::UnassignedVariable(*v))?;
            for w in image.variables() {
                if !vars.insert(w) {
                    return Err(FreeTraceError::VariableOverlap(w));
                }
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut central: Vec<Vec<usize>> = Vec::new();
            let mut word = Vec::new();
            for &v in m.word() {
                let image = &assignment[&v];
                word.extend_from_slice(image.word());
                central.extend(image.trace_factors().iter().cloned());
            }
            for factor in m.trace_factors() {
                let mut spliced = Vec::new();
                for &v in factor {
                    let image = &assignment[&v];
                    spliced.extend_from_slice(image.word());
                    central.extend(image.trace_factors().iter().cloned());
                }
                if spliced.is_empty() {
                    return Err(FreeTraceError::EmptyTraceFactor);
                }
                central.push(spliced);
            }
            terms.push((canonicalize(word, central)?, c.clone()));
        }
        TracePolynomial::from_terms(vars, terms)
    }

    /// Renaming of variables; the map must be injective on the variable set.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Result<TracePolynomial, FreeTraceError> {
        let mut vars = BTreeSet::new();
        for &v in &self.vars {
            if !vars.insert(map(v)) {
                return Err(FreeTraceError::VariableOverlap(map(v)));
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.relabel(&map)?, c.clone()));
        }
        TracePolynomial::from_terms(vars, terms)
    }

    /// Canonical text form; `parse ∘ render` is the identity on canonical
    /// polynomials.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        if self.terms.is_empty() {
            out.push('0');
            return out;
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rat::zero();
            let abs = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if !abs.is_one() || m.is_unit() {
                let _ = write!(out, "{} ", format_rat(&abs));
            }
            if !m.is_unit() {
                let _ = write!(out, "{m}");
            } else {
                // trim the trailing space after a bare coefficient
                out.truncate(out.trim_end().len());
            }
        }
        out
    }
}

impl core::fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.render())
    }
}
