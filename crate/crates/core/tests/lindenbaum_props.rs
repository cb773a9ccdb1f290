//! Lindenbaum-Tarski algebras, projections and the model correspondence.

use proptest::prelude::*;

use stonework::algebra::{check_homomorphism, verify_axioms, BooleanAlgebra, TwoElementAlgebra};
use stonework::completeness::{
    assignment_to_hom, characteristic_hom, check_theory, find_model_via_ultrafilter,
    hom_to_assignment, soundness_check,
};
use stonework::filters::enumerate_ultrafilters;
use stonework::lindenbaum::{build_lt_algebra, projection};
use stonework::logic::{
    evaluate, models, sat_oracle, semantically_equivalent, Assignment, Formula, Theory, Universe,
};
use stonework::ElementId;

fn universe() -> Universe {
    Universe::new(["P", "Q", "R"]).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("P"), Just("Q"), Just("R")].prop_map(Formula::var);
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn theory() -> impl Strategy<Value = Theory> {
    prop::collection::vec(formula(), 0..4).prop_map(|fs| Theory::new(universe(), fs).unwrap())
}

/// Every map `B_L(∅) → 2` over `n` variables that is a homomorphism
/// corresponds to exactly one assignment, and back.
fn homomorphisms_match_assignments(n: usize) {
    let u = Universe::new(["P", "Q"].into_iter().take(n)).unwrap();
    let free = build_lt_algebra(&Theory::empty(u.clone())).unwrap();
    let size = free.size();
    let mut homs = Vec::new();
    for code in 0u64..1 << size {
        let map: Vec<ElementId> = (0..size).map(|i| ElementId((code >> i & 1) as usize)).collect();
        if check_homomorphism(&map, &free, &TwoElementAlgebra).unwrap() {
            homs.push(map);
        }
    }
    assert_eq!(homs.len(), u.assignment_count());
    for h in u.assignments() {
        let g = assignment_to_hom(&h, &free).unwrap();
        assert!(homs.contains(&g));
        assert_eq!(hom_to_assignment(&g, &free).unwrap(), h);
    }
}

#[test]
fn assignments_correspond_to_homomorphisms() {
    for n in 0..=2 {
        homomorphisms_match_assignments(n);
    }
}

#[test]
fn free_algebra_sizes() {
    for (n, size) in [(0, 2), (1, 4), (2, 16), (3, 256)] {
        let u = Universe::new(["P", "Q", "R"].into_iter().take(n)).unwrap();
        assert_eq!(build_lt_algebra(&Theory::empty(u)).unwrap().size(), size);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classes_are_well_defined(t in theory(), f in formula(), g in formula()) {
        let lt = build_lt_algebra(&t).unwrap();
        let same = lt.element_of(&f).unwrap() == lt.element_of(&g).unwrap();
        prop_assert_eq!(same, semantically_equivalent(&f, &g, &t).unwrap());
        let and = lt.element_of(&Formula::and(f.clone(), g.clone())).unwrap();
        prop_assert_eq!(and, lt.meet(lt.element_of(&f).unwrap(), lt.element_of(&g).unwrap()));
        let or = lt.element_of(&Formula::or(f.clone(), g.clone())).unwrap();
        prop_assert_eq!(or, lt.join(lt.element_of(&f).unwrap(), lt.element_of(&g).unwrap()));
        let not = lt.element_of(&Formula::not(f.clone())).unwrap();
        prop_assert_eq!(not, lt.complement(lt.element_of(&f).unwrap()));
    }

    #[test]
    fn every_class_has_a_representative(t in theory()) {
        let lt = build_lt_algebra(&t).unwrap();
        prop_assert!(verify_axioms(&lt).unwrap().all_pass());
        prop_assert_eq!(lt.size(), 1 << models(&t).unwrap().len());
        for c in lt.elements() {
            let rep = lt.representative_formula(c).unwrap();
            prop_assert_eq!(lt.element_of(&rep).unwrap(), c);
        }
    }

    #[test]
    fn projection_is_an_onto_homomorphism(t in theory()) {
        let free = build_lt_algebra(&Theory::empty(universe())).unwrap();
        let lt = build_lt_algebra(&t).unwrap();
        let pi = projection(&free, &lt).unwrap();
        prop_assert!(check_homomorphism(&pi, &free, &lt).unwrap());
        let mut hit = vec![false; lt.size()];
        for c in &pi {
            hit[c.0] = true;
        }
        prop_assert!(hit.into_iter().all(|b| b));
    }

    #[test]
    fn characteristic_maps_are_homomorphisms(t in theory()) {
        let lt = build_lt_algebra(&t).unwrap();
        let ults = enumerate_ultrafilters(&lt).unwrap();
        prop_assert_eq!(ults.len(), models(&t).unwrap().len());
        for u in ults {
            let chi = characteristic_hom(&lt, u.members()).unwrap();
            prop_assert!(check_homomorphism(&chi, &lt, &TwoElementAlgebra).unwrap());
        }
    }

    #[test]
    fn ultrafilter_route_agrees_with_the_oracle(t in theory()) {
        let found = find_model_via_ultrafilter(&t).unwrap();
        prop_assert_eq!(found.is_some(), sat_oracle(&t).unwrap().is_some());
        if let Some(h) = found {
            for f in t.formulas() {
                prop_assert!(evaluate(f, &h).unwrap());
            }
        }
        let free = build_lt_algebra(&Theory::empty(universe())).unwrap();
        prop_assert!(check_theory(&free, &t).unwrap().ok());
    }

    #[test]
    fn every_model_closes_the_diagram(t in theory()) {
        for i in models(&t).unwrap() {
            let h = Assignment::from_index(t.universe(), i);
            let d = soundness_check(&t, &h).unwrap();
            prop_assert!(d.h_tilde_is_homomorphism && d.commutes && d.target_nontrivial);
        }
    }
}
