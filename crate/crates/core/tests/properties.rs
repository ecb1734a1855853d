use proptest::prelude::*;
use ribbon_core::ops::{
    circ, equivalence_class, equivalent, equivalent_via, irreducible_factorization, EquivalenceRoute,
};
use ribbon_core::qsym::Basis;
use ribbon_core::rational::int;
use ribbon_core::sym::{ribbon_in_f, ribbon_in_h, ribbon_shape, schur_extract, skew_schur_in_f};
use ribbon_core::Composition;

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n - 1).prop_map(move |cuts| {
            let mask = cuts.iter().enumerate().fold(0u64, |m, (i, &b)| m | ((b as u64) << i));
            Composition::from_descent_mask(mask, n)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_members_are_equivalent_by_multiset(beta in composition(14)) {
        let class = equivalence_class(&beta);
        prop_assert!(class.len().is_power_of_two());
        for gamma in &class {
            prop_assert!(equivalent_via(&beta, gamma, EquivalenceRoute::Multiset));
        }
    }

    #[test]
    fn factorization_recomposes(beta in composition(16)) {
        prop_assert_eq!(irreducible_factorization(&beta).compose(), beta);
    }

    #[test]
    fn routes_agree_on_random_pairs(a in composition(9), b in composition(9)) {
        let same_f = ribbon_in_f(&a).unwrap() == ribbon_in_f(&b).unwrap();
        let same_h = ribbon_in_h(&a) == ribbon_in_h(&b);
        prop_assert_eq!(same_f, same_h);
        prop_assert_eq!(same_h, equivalent(&a, &b));
    }

    #[test]
    fn composing_preserves_equivalence(a in composition(4), b in composition(3)) {
        // reversing the right factor of a ∘ b stays in the class
        prop_assert!(equivalent(&circ(&a, &b), &circ(&a, &b.reverse())));
        prop_assert!(equivalent(&circ(&a, &b), &circ(&a, &b).reverse()));
    }

    #[test]
    fn h_image_matches_tableaux(beta in composition(9)) {
        let via_h = ribbon_in_h(&beta).to_qsym();
        let via_syt = skew_schur_in_f(&ribbon_shape(&beta)).unwrap();
        prop_assert!(via_h.same_function(&via_syt));
        prop_assert_eq!(via_syt.basis(), Basis::F);
        let schur = schur_extract(&via_syt).unwrap();
        prop_assert!(schur.values().all(|c| c.is_integer() && *c > int(0)));
    }
}
