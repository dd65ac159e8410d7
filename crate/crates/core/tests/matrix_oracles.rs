//! Library determinants, ranks and minors against cofactor-expansion oracles.

mod common;

use common::{laplace_det, laplace_principal, minor_rank, multiply, select, subsets};
use proptest::prelude::*;
use sepr::exact::{GaussianRational, Rational, Sign};
use sepr::matrix::{HermitianMatrix, IndexSet};
use sepr::sepr::{compute_sepr, SeprSequence, SeprTerm};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// sepr-sequence straight from the definition, using only Laplace minors.
fn sepr_by_definition(b: &HermitianMatrix) -> SeprSequence {
    let n = b.order();
    let terms = (1..=n)
        .map(|k| {
            let signs: Vec<Sign> = subsets(n, k).iter().map(|s| laplace_principal(b, s).sign()).collect();
            let pos = signs.contains(&Sign::Positive);
            let neg = signs.contains(&Sign::Negative);
            let all = signs.iter().all(|&s| s != Sign::Zero);
            match (pos, neg, all) {
                (false, false, _) => SeprTerm::N,
                (true, true, true) => SeprTerm::AStar,
                (true, false, true) => SeprTerm::APlus,
                (false, true, true) => SeprTerm::AMinus,
                (true, true, false) => SeprTerm::SStar,
                (true, false, false) => SeprTerm::SPlus,
                (false, true, false) => SeprTerm::SMinus,
            }
        })
        .collect();
    SeprSequence::new(terms).unwrap()
}

#[test]
fn f_two_half_two_determinant() {
    let half = GaussianRational::real(q(1, 2));
    let g = |x: i64| GaussianRational::from(x);
    let rows = vec![
        vec![g(2), g(5), g(1), g(1)],
        vec![g(5), half, g(1), g(1)],
        vec![g(1), g(1), g(1), g(2)],
        vec![g(1), g(1), g(2), g(1)],
    ];
    let b = HermitianMatrix::new(rows.clone()).unwrap();
    let oracle = laplace_det(&rows);
    assert_eq!(oracle, GaussianRational::from(57));
    assert_eq!(b.determinant(), q(57, 1));
    assert_eq!(b.determinant().sign(), Sign::Positive);
}

#[test]
fn fixed_small_cases() {
    let b = HermitianMatrix::from_integer_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(b.determinant(), q(-1, 1));
    assert_eq!(b.rank(), 2);
    let z = HermitianMatrix::zero(3).unwrap();
    assert_eq!(z.determinant(), Rational::zero());
    assert_eq!(z.rank(), 0);
    let i = GaussianRational::i();
    let c = HermitianMatrix::new(vec![vec![GaussianRational::one(), i.clone()], vec![-i, GaussianRational::one()]])
        .unwrap();
    assert_eq!(c.determinant(), Rational::zero());
    assert_eq!(c.rank(), 1);
}

#[test]
fn principal_minor_listing_order() {
    let b = HermitianMatrix::from_integer_rows(&[vec![1, 2, 0], vec![2, 3, 1], vec![0, 1, -1]]).unwrap();
    let twos = b.all_principal_minors(2).unwrap();
    let sets: Vec<Vec<usize>> = twos.iter().map(|(s, _)| s.indices().to_vec()).collect();
    assert_eq!(sets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    let values: Vec<Rational> = twos.into_iter().map(|(_, v)| v).collect();
    assert_eq!(values, vec![q(-1, 1), q(-1, 1), q(-4, 1)]);
    assert!(b.all_principal_minors(0).is_err());
    assert!(b.all_principal_minors(4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn determinant_matches_laplace(b in common::hermitian(1, 5)) {
        let oracle = laplace_det(b.rows());
        prop_assert!(oracle.is_real());
        prop_assert_eq!(b.determinant(), oracle.re);
    }

    #[test]
    fn every_principal_minor_matches_laplace(b in common::any_matrix(1, 5)) {
        let table = b.principal_minors();
        for mask in 1..=table.full_mask() {
            let alpha = IndexSet::from_mask(mask);
            prop_assert_eq!(table.value(mask), &laplace_principal(&b, alpha.indices()));
        }
    }

    #[test]
    fn sepr_matches_definition(b in common::any_matrix(1, 5)) {
        prop_assert_eq!(compute_sepr(&b), sepr_by_definition(&b));
    }

    #[test]
    fn rank_matches_minor_oracle(b in common::any_matrix(1, 4)) {
        prop_assert_eq!(b.rank(), minor_rank(b.rows()));
    }

    #[test]
    fn submatrix_rank_matches_minor_oracle(b in common::hermitian(2, 4), rmask in 1u64..16, cmask in 1u64..16) {
        let n = b.order();
        let full = (1u64 << n) - 1;
        let rows = IndexSet::from_mask(rmask & full);
        let cols = IndexSet::from_mask(cmask & full);
        prop_assume!(!rows.is_empty() && !cols.is_empty());
        let sub = select(b.rows(), rows.indices(), cols.indices());
        let expected = (1..=rows.len().min(cols.len()))
            .rev()
            .find(|&k| {
                subsets(rows.len(), k).iter().any(|r| {
                    subsets(cols.len(), k).iter().any(|c| !laplace_det(&select(&sub, r, c)).is_zero())
                })
            })
            .unwrap_or(0);
        prop_assert_eq!(b.submatrix_rank(rows.indices(), cols.indices()), expected);
    }

    #[test]
    fn rank_is_principal(b in common::any_matrix(1, 6)) {
        let table = b.principal_minors();
        prop_assert_eq!(b.rank(), table.max_nonsingular_order_within(table.full_mask()));
    }

    #[test]
    fn deleting_a_row_and_column_drops_rank_by_at_most_two(b in common::any_matrix(2, 6), pick in any::<prop::sample::Index>()) {
        let n = b.order();
        let j = pick.index(n);
        let keep: Vec<usize> = (0..n).filter(|&x| x != j).collect();
        let sub = b.principal_submatrix(&IndexSet::new(keep.clone(), n).unwrap()).unwrap();
        let (r, s) = (b.rank(), sub.rank());
        prop_assert!(s <= r && r <= s + 2, "rank {} -> {}", r, s);
        let all: Vec<usize> = (0..n).collect();
        let row_gone = b.submatrix_rank(&keep, &all);
        prop_assert!(row_gone <= r && r <= row_gone + 1);
    }

    #[test]
    fn permutation_similarity_keeps_minors(b in common::any_matrix(1, 6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = b.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = b.permute(&perm).unwrap();
        prop_assert_eq!(p.determinant(), b.determinant());
        prop_assert_eq!(p.rank(), b.rank());
        prop_assert_eq!(compute_sepr(&p), compute_sepr(&b));
    }

    #[test]
    fn same_order_minors_agree_in_sign_at_the_rank(b in common::any_matrix(1, 6)) {
        let r = b.rank();
        prop_assume!(r > 0);
        let signs: Vec<Sign> = b
            .all_principal_minors(r)
            .unwrap()
            .into_iter()
            .map(|(_, v)| v.sign())
            .filter(|&s| s != Sign::Zero)
            .collect();
        prop_assert!(!signs.is_empty());
        prop_assert!(signs.iter().all(|&s| s == signs[0]));
    }

    #[test]
    fn inverse_times_matrix_is_identity(b in common::hermitian(1, 5)) {
        prop_assume!(!b.determinant().is_zero());
        let inv = b.inverse().unwrap();
        let id = HermitianMatrix::identity(b.order()).unwrap();
        prop_assert_eq!(multiply(b.rows(), inv.rows()), id.rows().to_vec());
        prop_assert_eq!(&inv.determinant() * &b.determinant(), Rational::one());
    }

    #[test]
    fn singular_matrices_have_no_inverse(b in common::real_symmetric(1, 5)) {
        prop_assume!(b.determinant().is_zero());
        prop_assert!(b.inverse().is_err());
    }
}
