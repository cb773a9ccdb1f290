use std::fmt;

use serde::Serialize;

use super::{BooleanAlgebra, ElementId, DEFAULT_CARRIER_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Associativity,
    Commutativity,
    Absorption,
    Distributivity,
    Complementation,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Associativity,
        Axiom::Commutativity,
        Axiom::Absorption,
        Axiom::Distributivity,
        Axiom::Complementation,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Associativity => "B1",
            Axiom::Commutativity => "B2",
            Axiom::Absorption => "B3",
            Axiom::Distributivity => "B4",
            Axiom::Complementation => "B5",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Commutativity => "commutativity",
            Axiom::Absorption => "absorption",
            Axiom::Distributivity => "distributivity",
            Axiom::Complementation => "complementation",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label(), self.name())
    }
}

/// The first instantiation, in canonical order, at which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: &'static str,
    pub x: ElementId,
    pub y: Option<ElementId>,
    pub z: Option<ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub counterexample: Option<Counterexample>,
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub carrier_size: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::passed)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("report covers every axiom")
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

pub fn verify_axioms<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<AxiomReport> {
    verify_axioms_with_cap(a, DEFAULT_CARRIER_CAP)
}

/// Checks B1 to B5 over every instantiation of `x, y, z`.
///
/// Structural problems (table entries outside the carrier) are reported as
/// errors before any identity is evaluated.
pub fn verify_axioms_with_cap<A: BooleanAlgebra + ?Sized>(a: &A, cap: usize) -> Result<AxiomReport> {
    let n = a.size();
    if n > cap {
        return Err(Error::TooLarge {
            what: "carrier size",
            requested: n as u128,
            cap: cap as u128,
        });
    }
    check_structure(a)?;

    let outcomes = Axiom::ALL
        .iter()
        .map(|&axiom| AxiomOutcome {
            axiom,
            counterexample: match axiom {
                Axiom::Associativity => associativity(a),
                Axiom::Commutativity => commutativity(a),
                Axiom::Absorption => absorption(a),
                Axiom::Distributivity => distributivity(a),
                Axiom::Complementation => complementation(a),
            },
        })
        .collect();
    Ok(AxiomReport {
        carrier_size: n,
        outcomes,
    })
}

fn check_structure<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<()> {
    let n = a.size();
    if n == 0 {
        return Err(Error::Structure("carrier is empty".into()));
    }
    let out = |what: &str, v: ElementId| {
        Error::Structure(format!("{what} yields {} outside a carrier of {n}", v.0))
    };
    for (what, v) in [("zero", a.zero()), ("one", a.one())] {
        if !a.contains(v) {
            return Err(out(what, v));
        }
    }
    for x in a.elements() {
        let c = a.complement(x);
        if !a.contains(c) {
            return Err(out("complement", c));
        }
        for y in a.elements() {
            let j = a.join(x, y);
            if !a.contains(j) {
                return Err(out("join", j));
            }
            let m = a.meet(x, y);
            if !a.contains(m) {
                return Err(out("meet", m));
            }
        }
    }
    Ok(())
}

fn triple(law: &'static str, x: ElementId, y: ElementId, z: ElementId) -> Option<Counterexample> {
    Some(Counterexample {
        law,
        x,
        y: Some(y),
        z: Some(z),
    })
}

fn pair(law: &'static str, x: ElementId, y: ElementId) -> Option<Counterexample> {
    Some(Counterexample {
        law,
        x,
        y: Some(y),
        z: None,
    })
}

fn associativity<A: BooleanAlgebra + ?Sized>(a: &A) -> Option<Counterexample> {
    for x in a.elements() {
        for y in a.elements() {
            let xy_join = a.join(x, y);
            let xy_meet = a.meet(x, y);
            for z in a.elements() {
                if a.join(x, a.join(y, z)) != a.join(xy_join, z) {
                    return triple("x+(y+z)=(x+y)+z", x, y, z);
                }
                if a.meet(x, a.meet(y, z)) != a.meet(xy_meet, z) {
                    return triple("x·(y·z)=(x·y)·z", x, y, z);
                }
            }
        }
    }
    None
}

fn commutativity<A: BooleanAlgebra + ?Sized>(a: &A) -> Option<Counterexample> {
    for x in a.elements() {
        for y in a.elements() {
            if a.join(x, y) != a.join(y, x) {
                return pair("x+y=y+x", x, y);
            }
            if a.meet(x, y) != a.meet(y, x) {
                return pair("x·y=y·x", x, y);
            }
        }
    }
    None
}

fn absorption<A: BooleanAlgebra + ?Sized>(a: &A) -> Option<Counterexample> {
    for x in a.elements() {
        for y in a.elements() {
            if a.join(x, a.meet(x, y)) != x {
                return pair("x+(x·y)=x", x, y);
            }
            if a.meet(x, a.join(x, y)) != x {
                return pair("x·(x+y)=x", x, y);
            }
        }
    }
    None
}

fn distributivity<A: BooleanAlgebra + ?Sized>(a: &A) -> Option<Counterexample> {
    for x in a.elements() {
        for y in a.elements() {
            let xy_meet = a.meet(x, y);
            let xy_join = a.join(x, y);
            for z in a.elements() {
                if a.meet(x, a.join(y, z)) != a.join(xy_meet, a.meet(x, z)) {
                    return triple("x·(y+z)=(x·y)+(x·z)", x, y, z);
                }
                if a.join(x, a.meet(y, z)) != a.meet(xy_join, a.join(x, z)) {
                    return triple("x+(y·z)=(x+y)·(x+z)", x, y, z);
                }
            }
        }
    }
    None
}

fn complementation<A: BooleanAlgebra + ?Sized>(a: &A) -> Option<Counterexample> {
    let single = |law, x| {
        Some(Counterexample {
            law,
            x,
            y: None,
            z: None,
        })
    };
    for x in a.elements() {
        let c = a.complement(x);
        if a.join(x, c) != a.one() {
            return single("x+(−x)=1", x);
        }
        if a.meet(x, c) != a.zero() {
            return single("x·(−x)=0", x);
        }
    }
    None
}

/// Whether, for every `x`, the only `y` with `x + y = 1` and `x · y = 0` is `−x`.
pub fn check_complement_uniqueness<A: BooleanAlgebra + ?Sized>(a: &A) -> bool {
    a.elements().all(|x| {
        a.elements()
            .filter(|&y| a.join(x, y) == a.one() && a.meet(x, y) == a.zero())
            .all(|y| y == a.complement(x))
    })
}

/// Whether `−(x+y) = −x·−y` and `−(x·y) = −x+−y` for every pair.
pub fn check_de_morgan<A: BooleanAlgebra + ?Sized>(a: &A) -> bool {
    a.elements().all(|x| {
        let cx = a.complement(x);
        a.elements().all(|y| {
            let cy = a.complement(y);
            a.complement(a.join(x, y)) == a.meet(cx, cy)
                && a.complement(a.meet(x, y)) == a.join(cx, cy)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteAlgebra, PowerSetAlgebra};

    fn swapped_complement_two() -> FiniteAlgebra {
        FiniteAlgebra::from_tables(
            vec!["0".into(), "1".into()],
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![0, 0], vec![0, 1]],
            vec![0, 1],
            0,
            1,
        )
        .unwrap()
    }

    #[test]
    fn power_set_passes() {
        let a = PowerSetAlgebra::new(["a", "b", "c"]).unwrap();
        let report = verify_axioms(&a).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.outcomes.len(), 5);
    }

    #[test]
    fn trivial_algebra_passes() {
        assert!(verify_axioms(&FiniteAlgebra::trivial()).unwrap().all_pass());
        assert!(check_complement_uniqueness(&FiniteAlgebra::trivial()));
    }

    #[test]
    fn swapped_complement_fails_b5_at_zero() {
        let report = verify_axioms(&swapped_complement_two()).unwrap();
        let b5 = report.outcome(Axiom::Complementation);
        let cx = b5.counterexample.as_ref().unwrap();
        assert_eq!(cx.x, ElementId(0));
        assert_eq!(cx.law, "x+(−x)=1");
        assert_eq!(report.failures().count(), 1);
    }

    #[test]
    fn oversized_carrier_is_refused() {
        let a = PowerSetAlgebra::new(["a", "b", "c"]).unwrap();
        assert!(verify_axioms_with_cap(&a, 7).unwrap_err().is_size_refusal());
    }

    /// An algebra whose join table escapes the carrier.
    struct Leaky;

    impl BooleanAlgebra for Leaky {
        fn size(&self) -> usize {
            2
        }
        fn join(&self, _: ElementId, _: ElementId) -> ElementId {
            ElementId(7)
        }
        fn meet(&self, x: ElementId, _: ElementId) -> ElementId {
            x
        }
        fn complement(&self, x: ElementId) -> ElementId {
            x
        }
        fn zero(&self) -> ElementId {
            ElementId(0)
        }
        fn one(&self) -> ElementId {
            ElementId(1)
        }
        fn element_name(&self, x: ElementId) -> String {
            x.to_string()
        }
    }

    #[test]
    fn structure_checked_before_axioms() {
        assert!(matches!(verify_axioms(&Leaky), Err(Error::Structure(_))));
    }

    #[test]
    fn de_morgan_small_cases() {
        assert!(check_de_morgan(&FiniteAlgebra::two()));
        assert!(check_de_morgan(&PowerSetAlgebra::new(["1", "2", "3"]).unwrap()));
        assert!(check_complement_uniqueness(&PowerSetAlgebra::new(["a", "b"]).unwrap()));
    }
}
