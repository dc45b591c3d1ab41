//! Property tests for the expression grammar.

use proptest::prelude::*;

use tracepoly_cli::parse::parse_polynomial;
use tracepoly_core::freetrace::{enumerate_mt_basis, TraceMonomial, TracePolynomial};
use tracepoly_core::rat::{rat, Rat};

fn arb_poly() -> impl Strategy<Value = TracePolynomial> {
    (1usize..=4).prop_flat_map(|n| {
        let basis = enumerate_mt_basis(n).unwrap();
        let dim = basis.len();
        proptest::collection::vec(
            ((0..dim), (-9i64..=9), (1i64..=5)),
            1..=4,
        )
        .prop_map(move |picks| {
            let terms: Vec<(TraceMonomial, Rat)> = picks
                .into_iter()
                .map(|(i, num, den)| (basis[i].clone(), rat(num, den)))
                .collect();
            TracePolynomial::from_terms((1..=n).collect(), terms).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(p in arb_poly()) {
        // the zero polynomial renders as "0", which the grammar has no term
        // for; every nonzero canonical polynomial round-trips
        prop_assume!(!p.is_zero());
        let parsed = parse_polynomial(&p.render())
            .map_err(|e| TestCaseError::fail(format!("{e} in {}", p.render())))?;
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn parser_never_panics(s in "[ x0-9+/()Tr-]{0,40}") {
        let _ = parse_polynomial(&s);
    }
}
