//! Sequence-level laws checked on generated matrices.

mod common;

use proptest::prelude::*;
use sepr::classify::fixtures::NOT_INITIAL;
use sepr::classify::{all_sequences, classify_sequence, forbidden_order2, scan_for_forbidden, Field};
use sepr::exact::Rational;
use sepr::matrix::{HermitianMatrix, IndexSet};
use sepr::sepr::{compute_epr, compute_sepr, SeprSequence, SeprTerm};

fn field_of(b: &HermitianMatrix) -> Field {
    if b.is_real() {
        Field::RealSymmetric
    } else {
        Field::Hermitian
    }
}

/// Terms a principal submatrix may show at an order where the parent shows `t`.
fn inherited(t: SeprTerm) -> &'static [SeprTerm] {
    use SeprTerm::*;
    match t {
        N => &[N],
        APlus => &[APlus],
        AMinus => &[AMinus],
        SPlus => &[APlus, N, SPlus],
        SMinus => &[AMinus, N, SMinus],
        AStar | SStar => &SeprTerm::ALL,
    }
}

#[test]
fn order2_windows_force_order3_verdicts() {
    let bad = forbidden_order2(Field::Hermitian);
    for field in [Field::Hermitian, Field::RealSymmetric] {
        for s in all_sequences(3) {
            if s.windows(2).any(|(_, w)| bad.contains(&w)) {
                assert!(classify_sequence(&s, field).unwrap().is_forbidden(), "{s} over {field}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn underlying_sequence_is_the_epr_sequence(b in common::any_matrix(1, 6)) {
        prop_assert_eq!(compute_sepr(&b).uepr(), compute_epr(&b));
    }

    #[test]
    fn negation_flips_odd_orders(b in common::any_matrix(1, 6)) {
        let s = compute_sepr(&b);
        prop_assert_eq!(compute_sepr(&b.negate()), s.of_negated_matrix());
        if b.order() % 2 == 0 {
            prop_assert_eq!(compute_sepr(&b.negate()).last(), s.last());
        }
    }

    #[test]
    fn bordering_with_zero(b in common::any_matrix(1, 5)) {
        let z = b.direct_sum(&HermitianMatrix::diagonal(&[Rational::zero()]).unwrap());
        prop_assert_eq!(compute_sepr(&z), compute_sepr(&b).append_zero());
    }

    #[test]
    fn duplicating_the_last_row_and_column(b in common::any_matrix(1, 5)) {
        prop_assert_eq!(compute_sepr(&b.duplicate_last()), compute_sepr(&b).append_last_duplicate());
    }

    #[test]
    fn inverse_reverses_the_sequence(b in common::any_matrix(1, 5)) {
        let s = compute_sepr(&b);
        match s.last() {
            SeprTerm::APlus | SeprTerm::AMinus => {
                let inv = b.inverse().unwrap();
                prop_assert_eq!(Some(compute_sepr(&inv)), s.of_inverse());
            }
            _ => prop_assert_eq!(s.of_inverse(), None),
        }
    }

    #[test]
    fn nn_is_followed_only_by_n(b in common::any_matrix(2, 6)) {
        let t = compute_sepr(&b);
        let t = t.terms();
        if let Some(k) = t.windows(2).position(|w| w == [SeprTerm::N, SeprTerm::N]) {
            prop_assert!(t[k..].iter().all(|&x| x == SeprTerm::N), "{:?}", t);
        }
    }

    #[test]
    fn last_term_is_never_s(b in common::any_matrix(1, 6)) {
        let last = compute_sepr(&b).last();
        prop_assert!(!matches!(last, SeprTerm::SStar | SeprTerm::SPlus | SeprTerm::SMinus));
    }

    #[test]
    fn principal_submatrices_inherit(b in common::any_matrix(2, 6), mask in 1u64..64) {
        let n = b.order();
        let alpha = IndexSet::from_mask(mask & ((1 << n) - 1));
        prop_assume!(!alpha.is_empty());
        let parent = compute_sepr(&b);
        let child = compute_sepr(&b.principal_submatrix(&alpha).unwrap());
        for (j, c) in child.terms().iter().enumerate() {
            let p = parent.terms()[j];
            prop_assert!(inherited(p).contains(c), "order {}: parent {} child {}", j + 1, p, c);
        }
    }

    #[test]
    fn no_forbidden_initial_pair(b in common::any_matrix(2, 6)) {
        let s = compute_sepr(&b);
        let head = s.window(1, 2).to_string();
        prop_assert!(!NOT_INITIAL.contains(&head.as_str()), "{}", s);
    }

    #[test]
    fn scan_finds_nothing(b in common::any_matrix(1, 6)) {
        let s = compute_sepr(&b);
        let hits = scan_for_forbidden(&s, field_of(&b));
        prop_assert!(hits.is_empty(), "{}: {:?}", s, hits);
    }

    #[test]
    fn sequence_text_round_trips(terms in proptest::collection::vec(proptest::sample::select(SeprTerm::ALL.to_vec()), 1..10)) {
        let s = SeprSequence::new(terms).unwrap();
        prop_assert_eq!(s.to_string().parse::<SeprSequence>().unwrap(), s.clone());
        prop_assert_eq!(s.neg().neg(), s);
    }
}
