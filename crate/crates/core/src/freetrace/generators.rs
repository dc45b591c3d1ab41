//! The named trace polynomials used throughout: generators of the trace
//! T-ideals of the diagonal, nilpotent-extension and upper-triangular
//! algebras, and the separating polynomials between them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::rat::Rat;

use super::monomial::{canonicalize, TraceMonomial};
use super::poly::TracePolynomial;

fn mono(word: &[usize], factors: &[&[usize]]) -> TraceMonomial {
    canonicalize(word.to_vec(), factors.iter().map(|f| f.to_vec()).collect())
        .expect("builtin monomials are multilinear")
}

fn poly(n: usize, terms: Vec<(TraceMonomial, Rat)>) -> TracePolynomial {
    let vars: BTreeSet<usize> = (1..=n).collect();
    TracePolynomial::from_terms(vars, terms).expect("builtin polynomials are multilinear")
}

/// `x1 x2 − x2 x1`, the commutativity law.
pub fn commutator() -> TracePolynomial {
    let one = Rat::one();
    poly(
        2,
        vec![
            (mono(&[1, 2], &[]), one.clone()),
            (mono(&[2, 1], &[]), -one),
        ],
    )
}

/// `Tr(x1)Tr(x2) − α Tr(x1 x2)`: the trace is multiplicative up to `α` on a
/// rank-one trace.
pub fn trace_mult(alpha: &Rat) -> TracePolynomial {
    poly(
        2,
        vec![
            (mono(&[], &[&[1], &[2]]), Rat::one()),
            (mono(&[], &[&[1, 2]]), -alpha),
        ],
    )
}

/// The linearized 2×2 Cayley–Hamilton trace polynomial, scaled by `α²`:
/// `α²(x1x2 + x2x1) + Tr(x1)Tr(x2) − α(Tr(x1)x2 + Tr(x2)x1 + Tr(x1x2))`.
pub fn cayley_hamilton(alpha: &Rat) -> TracePolynomial {
    let a2 = alpha * alpha;
    poly(
        2,
        vec![
            (mono(&[1, 2], &[]), a2.clone()),
            (mono(&[2, 1], &[]), a2),
            (mono(&[], &[&[1], &[2]]), Rat::one()),
            (mono(&[2], &[&[1]]), -alpha),
            (mono(&[1], &[&[2]]), -alpha),
            (mono(&[], &[&[1, 2]]), -alpha),
        ],
    )
}

/// Degree-3 relation that exchanges variables between two trace factors:
/// `−x1 Tr(x2)Tr(x3) + (α+β) x1 Tr(x2 x3) + x3 Tr(x1)Tr(x2)
///  − (α+β) x3 Tr(x1 x2) − Tr(x1)Tr(x2 x3) + Tr(x3)Tr(x1 x2)`.
pub fn trace_exchange(alpha: &Rat, beta: &Rat) -> TracePolynomial {
    let s = alpha + beta;
    poly(
        3,
        vec![
            (mono(&[1], &[&[2], &[3]]), -Rat::one()),
            (mono(&[1], &[&[2, 3]]), s.clone()),
            (mono(&[3], &[&[1], &[2]]), Rat::one()),
            (mono(&[3], &[&[1, 2]]), -s),
            (mono(&[], &[&[1], &[2, 3]]), -Rat::one()),
            (mono(&[], &[&[3], &[1, 2]]), Rat::one()),
        ],
    )
}

/// Degree-3 relation that rewrites a triple trace product; together with the
/// commutator and [`trace_exchange`] it generates the identities of the
/// diagonal algebra with distinct nonzero trace weights.
pub fn triple_trace_reduction(alpha: &Rat, beta: &Rat) -> TracePolynomial {
    let ab = alpha * beta;
    let s = alpha + beta;
    let q = alpha * alpha + &ab + beta * beta;
    poly(
        3,
        vec![
            (mono(&[], &[&[1], &[2], &[3]]), Rat::one()),
            (mono(&[1, 2, 3], &[]), -(&ab * &s)),
            (mono(&[1, 2], &[&[3]]), ab.clone()),
            (mono(&[1, 3], &[&[2]]), ab.clone()),
            (mono(&[2, 3], &[&[1]]), ab.clone()),
            (mono(&[1], &[&[2], &[3]]), -s.clone()),
            (mono(&[1], &[&[2, 3]]), q),
            (mono(&[2], &[&[1, 3]]), -ab.clone()),
            (mono(&[3], &[&[1, 2]]), -ab.clone()),
            (mono(&[], &[&[1, 2, 3]]), ab),
            (mono(&[], &[&[1], &[2, 3]]), -s),
        ],
    )
}

/// The degree-3 identity of the algebra `C2` (unit plus square-zero element)
/// with trace `α` on the unit and `1` on the nilpotent:
/// `α x1x2x3 + Tr(x1x2)x3 + Tr(x1x3)x2 + Tr(x2x3)x1
///  − Tr(x1)x2x3 − Tr(x2)x1x3 − Tr(x3)x1x2 − Tr(x1x2x3)`.
pub fn c2_cubic(alpha: &Rat) -> TracePolynomial {
    let one = Rat::one();
    poly(
        3,
        vec![
            (mono(&[1, 2, 3], &[]), alpha.clone()),
            (mono(&[3], &[&[1, 2]]), one.clone()),
            (mono(&[2], &[&[1, 3]]), one.clone()),
            (mono(&[1], &[&[2, 3]]), one.clone()),
            (mono(&[2, 3], &[&[1]]), -one.clone()),
            (mono(&[1, 3], &[&[2]]), -one.clone()),
            (mono(&[1, 2], &[&[3]]), -one.clone()),
            (mono(&[], &[&[1, 2, 3]]), -one),
        ],
    )
}

/// Degree-2 identity of `C2` with trace `α` on the unit and `0` on the
/// nilpotent: `Tr(x1)Tr(x2) − α Tr(x1)x2 − α Tr(x2)x1 + α² x1x2`.
pub fn c2_bilinear(alpha: &Rat) -> TracePolynomial {
    poly(
        2,
        vec![
            (mono(&[], &[&[1], &[2]]), Rat::one()),
            (mono(&[2], &[&[1]]), -alpha),
            (mono(&[1], &[&[2]]), -alpha),
            (mono(&[1, 2], &[]), alpha * alpha),
        ],
    )
}

/// `[x1, x2][x3, x4]`, expanded.
pub fn commutator_product() -> TracePolynomial {
    let one = Rat::one();
    poly(
        4,
        vec![
            (mono(&[1, 2, 3, 4], &[]), one.clone()),
            (mono(&[1, 2, 4, 3], &[]), -one.clone()),
            (mono(&[2, 1, 3, 4], &[]), -one.clone()),
            (mono(&[2, 1, 4, 3], &[]), one),
        ],
    )
}

/// `Tr(x1)`.
pub fn single_trace() -> TracePolynomial {
    TracePolynomial::from_monomial(mono(&[], &[&[1]]), Rat::one())
}

/// `(Tr(x1) − α x1)(Tr(x2) − α x2) ⋯ (Tr(x_k) − α x_k)`, expanded to its
/// multilinear normal form (`2^k` terms). For an algebra `F·1 + J` with
/// `tr(1) = α`, `tr(J) = 0` and `J^k = 0` this is a trace identity.
pub fn trace_shift_product(alpha: &Rat, k: usize) -> TracePolynomial {
    assert!(k >= 1, "need at least one factor");
    let mut terms = Vec::with_capacity(1 << k);
    for mask in 0u64..(1 << k) {
        // bit i set: take Tr(x_{i+1}); clear: take −α x_{i+1}
        let mut factors: Vec<Vec<usize>> = Vec::new();
        let mut word = Vec::new();
        let mut coeff = Rat::one();
        for i in 0..k {
            let v = i + 1;
            if mask & (1 << i) != 0 {
                factors.push(vec![v]);
            } else {
                word.push(v);
                coeff *= -alpha.clone();
            }
        }
        terms.push((
            canonicalize(word, factors).expect("multilinear"),
            coeff,
        ));
    }
    poly(k, terms)
}

/// The named table of builtin polynomials at concrete parameters. Entries
/// whose definition uses one parameter take `alpha`; the two-parameter
/// entries take `(alpha, beta)`; the trace-shift products are instantiated
/// with 2 and 3 factors.
pub fn builtin_polynomials(alpha: &Rat, beta: &Rat) -> Vec<(String, TracePolynomial)> {
    vec![
        (String::from("commutator"), commutator()),
        (String::from("trace_mult"), trace_mult(alpha)),
        (String::from("cayley_hamilton"), cayley_hamilton(alpha)),
        (String::from("trace_exchange"), trace_exchange(alpha, beta)),
        (
            String::from("triple_trace"),
            triple_trace_reduction(alpha, beta),
        ),
        (String::from("c2_cubic"), c2_cubic(alpha)),
        (String::from("c2_bilinear"), c2_bilinear(alpha)),
        (String::from("commutator_product"), commutator_product()),
        (String::from("single_trace"), single_trace()),
        (
            String::from("trace_shift_2"),
            trace_shift_product(alpha, 2),
        ),
        (
            String::from("trace_shift_3"),
            trace_shift_product(alpha, 3),
        ),
    ]
}
