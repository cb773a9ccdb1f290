//! Parser and semantics properties over three variables.

use proptest::prelude::*;

use stonework::logic::{
    entails, evaluate, is_tautology, models, parse, sat_oracle, semantically_equivalent, Formula,
    Theory, Universe,
};

fn universe() -> Universe {
    Universe::new(["P", "Q", "R"]).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("P"), Just("Q"), Just("R")].prop_map(Formula::var);
    leaf.prop_recursive(6, 64, 2, |inner| {
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
    prop::collection::vec(formula(), 0..3).prop_map(|fs| Theory::new(universe(), fs).unwrap())
}

proptest! {
    #[test]
    fn printing_round_trips(f in formula()) {
        let printed = f.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), f);
    }

    #[test]
    fn equivalence_is_an_equivalence_relation(t in theory(), f in formula(), g in formula(), h in formula()) {
        prop_assert!(semantically_equivalent(&f, &f, &t).unwrap());
        let fg = semantically_equivalent(&f, &g, &t).unwrap();
        prop_assert_eq!(fg, semantically_equivalent(&g, &f, &t).unwrap());
        if fg && semantically_equivalent(&g, &h, &t).unwrap() {
            prop_assert!(semantically_equivalent(&f, &h, &t).unwrap());
        }
    }

    #[test]
    fn entailment_is_refutation(t in theory(), f in formula()) {
        let refuted = sat_oracle(&t.with(Formula::not(f.clone())).unwrap()).unwrap().is_none();
        prop_assert_eq!(entails(&t, &f).unwrap(), refuted);
    }

    #[test]
    fn de_morgan_is_valid(f in formula(), g in formula()) {
        let u = universe();
        let lhs = Formula::not(Formula::and(f.clone(), g.clone()));
        let rhs = Formula::or(Formula::not(f.clone()), Formula::not(g.clone()));
        prop_assert!(is_tautology(&Formula::iff(lhs, rhs), &u).unwrap());
        let lhs = Formula::not(Formula::or(f.clone(), g.clone()));
        let rhs = Formula::and(Formula::not(f), Formula::not(g));
        prop_assert!(is_tautology(&Formula::iff(lhs, rhs), &u).unwrap());
    }

    #[test]
    fn oracle_returns_the_first_model(t in theory()) {
        let all = models(&t).unwrap();
        match sat_oracle(&t).unwrap() {
            None => prop_assert!(all.is_empty()),
            Some(h) => {
                prop_assert_eq!(Some(&h.index()), all.first());
                for f in t.formulas() {
                    prop_assert!(evaluate(f, &h).unwrap());
                }
            }
        }
    }
}
