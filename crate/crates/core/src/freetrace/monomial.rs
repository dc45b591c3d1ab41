//! Canonical multilinear trace monomials.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::FreeTraceError;

/// A multilinear trace monomial: an ordered word of variable indices plus a
/// multiset of cyclic trace words.
///
/// Canonical form: every trace factor is rotated so its smallest variable
/// comes first, factors are sorted lexicographically, and each variable
/// occurs exactly once across the word and all factors. The derived ordering
/// is used as the tie-break order wherever monomials are sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceMonomial {
    word: Vec<usize>,
    trace_factors: Vec<Vec<usize>>,
}

/// Canonicalizes a raw word and trace factor list.
///
/// Each factor is rotated to start at its smallest variable (cyclic
/// invariance of `Tr`) and the factors are sorted (they commute). Fails on a
/// repeated variable or an empty trace factor.
pub fn canonicalize(
    word: Vec<usize>,
    trace_factors: Vec<Vec<usize>>,
) -> Result<TraceMonomial, FreeTraceError> {
    let mut seen = BTreeSet::new();
    for &v in word.iter().chain(trace_factors.iter().flatten()) {
        if !seen.insert(v) {
            return Err(FreeTraceError::RepeatedVariable(v));
        }
    }
    let mut factors = Vec::with_capacity(trace_factors.len());
    for mut factor in trace_factors {
        if factor.is_empty() {
            return Err(FreeTraceError::EmptyTraceFactor);
        }
        rotate_min_first(&mut factor);
        factors.push(factor);
    }
    factors.sort();
    Ok(TraceMonomial {
        word,
        trace_factors: factors,
    })
}

fn rotate_min_first(factor: &mut [usize]) {
    let min_pos = factor
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    factor.rotate_left(min_pos);
}

impl TraceMonomial {
    /// The empty monomial, i.e. the unit of the free algebra.
    pub fn unit() -> Self {
        TraceMonomial {
            word: Vec::new(),
            trace_factors: Vec::new(),
        }
    }

    /// See [`canonicalize`].
    pub fn new(word: Vec<usize>, trace_factors: Vec<Vec<usize>>) -> Result<Self, FreeTraceError> {
        canonicalize(word, trace_factors)
    }

    /// A plain word with no trace factors.
    pub fn from_word(word: Vec<usize>) -> Result<Self, FreeTraceError> {
        canonicalize(word, Vec::new())
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn trace_factors(&self) -> &[Vec<usize>] {
        &self.trace_factors
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty() && self.trace_factors.is_empty()
    }

    /// True when every variable sits inside a trace.
    pub fn is_pure(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of variables.
    pub fn degree(&self) -> usize {
        self.word.len() + self.trace_factors.iter().map(Vec::len).sum::<usize>()
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.word
            .iter()
            .chain(self.trace_factors.iter().flatten())
            .copied()
            .collect()
    }

    /// Applies a variable renaming and re-canonicalizes. Fails if the map is
    /// not injective on this monomial's variables.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Result<Self, FreeTraceError> {
        let word = self.word.iter().map(|&v| map(v)).collect();
        let factors = self
            .trace_factors
            .iter()
            .map(|f| f.iter().map(|&v| map(v)).collect())
            .collect();
        canonicalize(word, factors)
    }
}

impl core::fmt::Display for TraceMonomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for factor in &self.trace_factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "Tr(")?;
            for (i, v) in factor.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "x{v}")?;
            }
            write!(f, ")")?;
        }
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}
