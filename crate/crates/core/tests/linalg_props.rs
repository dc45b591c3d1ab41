//! Property tests for the exact linear algebra layer.

use num_traits::Zero;
use proptest::prelude::*;

use tracepoly_core::linalg::{Matrix, Subspace};
use tracepoly_core::rat::{rat, Rat};

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(
            (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d)),
            rows * cols,
        )
        .prop_map(move |data| {
            Matrix::from_rows(data.chunks(cols).map(<[Rat]>::to_vec).collect())
        })
    })
}

/// Rank over a 61-bit prime. Entries here are small enough that any nonzero
/// rational minor stays nonzero mod p, so this must agree exactly; it is a
/// cross-check on an independent code path, not ground truth.
fn rank_mod_p(m: &Matrix) -> usize {
    const P: u128 = 2_305_843_009_213_693_951; // 2^61 − 1
    fn inv(a: u128) -> u128 {
        // Fermat: a^(p−2) mod p
        let mut base = a % P;
        let mut exp = P - 2;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    }
    fn mulmod(a: u128, b: u128) -> u128 {
        // p < 2^61, so a·b < 2^122 fits in u128
        (a * b) % P
    }
    fn to_fp(x: &Rat) -> u128 {
        let p = num_bigint::BigInt::from(P);
        let n = ((x.numer() % &p) + &p) % &p;
        let d = ((x.denom() % &p) + &p) % &p;
        let n: u128 = n.try_into().unwrap();
        let d: u128 = d.try_into().unwrap();
        mulmod(n, inv(d))
    }

    let mut rows: Vec<Vec<u128>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(to_fp).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pinv = inv(rows[rank][col]);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = mulmod(rows[r][col], pinv);
                let pivot_row = rows[rank].clone();
                for (entry, p_entry) in rows[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = mulmod(factor, *p_entry);
                    *entry = (*entry + P - sub) % P;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_the_column_count(m in small_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn rref_is_idempotent_and_preserves_the_row_space(m in small_matrix()) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(pivots2, pivots);

        let original = Subspace::from_rows(
            m.cols(),
            m.row_vecs().map(<[Rat]>::to_vec).collect(),
        );
        let reduced = Subspace::from_rows(
            m.cols(),
            r.row_vecs().map(<[Rat]>::to_vec).collect(),
        );
        prop_assert!(original.leq(&reduced).unwrap());
        prop_assert!(reduced.leq(&original).unwrap());
    }

    #[test]
    fn kernel_vectors_annihilate(m in small_matrix()) {
        let k = m.kernel();
        for v in k.basis().row_vecs() {
            for i in 0..m.rows() {
                let dot = m
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x);
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn rank_agrees_with_the_modular_cross_check(m in small_matrix()) {
        prop_assert_eq!(m.rank(), rank_mod_p(&m));
    }

    #[test]
    fn subspace_sum_is_monotone(m in small_matrix(), k in small_matrix()) {
        // align widths by truncating to the smaller column count
        let cols = m.cols().min(k.cols());
        let take = |mat: &Matrix| -> Vec<Vec<Rat>> {
            mat.row_vecs().map(|r| r[..cols].to_vec()).collect()
        };
        let a = Subspace::from_rows(cols, take(&m));
        let b = Subspace::from_rows(cols, take(&k));
        let s = a.sum(&b).unwrap();
        prop_assert!(a.leq(&s).unwrap());
        prop_assert!(b.leq(&s).unwrap());
        prop_assert!(s.dim() <= a.dim() + b.dim());
    }
}
