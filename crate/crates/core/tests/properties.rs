mod common;

use std::sync::Arc;

use common::*;
use incidence::linalg::{PrimeField, Rationals};
use incidence::poset::enumerate_posets;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity_over_q((r, c, e) in matrix_entries()) {
        rank_nullity(&Rationals, r, c, &e)?;
    }

    #[test]
    fn rank_nullity_over_f2((r, c, e) in matrix_entries()) {
        rank_nullity(&PrimeField::new(2).unwrap(), r, c, &e)?;
    }

    #[test]
    fn rank_nullity_over_f3((r, c, e) in matrix_entries()) {
        rank_nullity(&PrimeField::new(3).unwrap(), r, c, &e)?;
    }
}

fn presentation() -> impl Strategy<Value = (usize, usize, Vec<usize>, Vec<usize>, Vec<i64>)> {
    (1usize..=4, 0usize..64).prop_flat_map(|(n, k)| {
        let count = enumerate_posets(n).unwrap().len();
        (
            Just(n),
            Just(k % count),
            prop::collection::vec(0..n, 1..4),
            prop::collection::vec(0..n, 0..4),
            prop::collection::vec(-2i64..3, 16),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn grade_bounded_by_pdim_for_presented_modules((n, k, t, s, e) in presentation()) {
        let p = Arc::new(enumerate_posets(n).unwrap()[k].clone());
        let m = presented_module(&p, &Rationals, t, s, &e);
        grade_at_most_pdim(&m).map_err(TestCaseError::fail)?;
        dual_involution(&m).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn presented_modules_over_f2((n, k, t, s, e) in presentation()) {
        let p = Arc::new(enumerate_posets(n).unwrap()[k].clone());
        let m = presented_module(&p, &PrimeField::new(2).unwrap(), t, s, &e);
        grade_at_most_pdim(&m).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn rowmotion_permutes_ideals_up_to_six() {
    for p in posets_up_to(6) {
        rowmotion_is_bijection(&p).unwrap();
    }
}

#[test]
fn dual_is_an_involution_on_constructed_modules() {
    for p in posets_up_to(4) {
        let p = Arc::new(p);
        for m in constructed_modules(&p, &Rationals) {
            dual_involution(&m).unwrap();
            grade_at_most_pdim(&m).unwrap();
        }
    }
}

#[test]
fn birkhoff_recovers_the_poset() {
    for p in posets_up_to(5) {
        birkhoff_round_trip(&p).unwrap();
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=5 {
        assert_eq!(
            enumerate_posets(n).unwrap().len(),
            brute_force_poset_count(n),
            "n = {n}"
        );
    }
    // Unlabelled poset counts, independently tabulated.
    let known = [1, 2, 5, 16, 63, 318];
    for (n, &count) in (1..=6).zip(&known) {
        assert_eq!(enumerate_posets(n).unwrap().len(), count);
    }
}

#[test]
fn lattice_catalog_counts() {
    // Unlabelled lattices with 1 to 7 elements.
    let known = [1, 1, 1, 2, 5, 15, 53];
    for (n, &count) in (1..=7).zip(&known) {
        assert_eq!(incidence::verify::lattices_of_size(n).unwrap().len(), count, "n = {n}");
    }
}

#[test]
fn profiles_of_distributive_lattices_do_not_depend_on_the_field() {
    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    for l in incidence::verify::lattice_catalog(7).unwrap() {
        if !l.is_distributive() {
            continue;
        }
        let q = incidence::homology::profile(l.poset(), &Rationals).unwrap();
        assert_eq!(q, incidence::homology::profile(l.poset(), &f2).unwrap());
        assert_eq!(q, incidence::homology::profile(l.poset(), &f3).unwrap());
    }
}
