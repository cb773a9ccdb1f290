//! Lindenbaum-Tarski algebras of finite theories.
//!
//! Formulas are identified when they agree on every model of the theory, so
//! the class of `α` is the set of `T`-models satisfying `α`. Over a finite
//! universe that makes `B_L(T)` the power-set algebra of `Mod(T)`: element
//! ids are characteristic masks over the canonical model list.

use crate::algebra::{BooleanAlgebra, ElementId, PowerSetAlgebra, DEFAULT_CARRIER_CAP};
use crate::error::{Error, Result};
use crate::logic::{models, Assignment, Formula, Theory, Universe};

/// An equivalence class `[α]`. Equality is by model set only.
#[derive(Clone, Debug)]
pub struct EquivClass {
    pub model_set: ElementId,
    pub representative: Formula,
}

impl PartialEq for EquivClass {
    fn eq(&self, other: &Self) -> bool {
        self.model_set == other.model_set
    }
}

impl Eq for EquivClass {}

#[derive(Clone, Debug)]
pub struct LtAlgebra {
    theory: Theory,
    models: Vec<usize>,
    sets: PowerSetAlgebra,
}

pub fn build_lt_algebra(t: &Theory) -> Result<LtAlgebra> {
    build_lt_algebra_with_cap(t, DEFAULT_CARRIER_CAP)
}

/// Materializes `B_L(T)`, refusing when `2^|Mod(T)|` exceeds `cap`.
pub fn build_lt_algebra_with_cap(t: &Theory, cap: usize) -> Result<LtAlgebra> {
    let models = models(t)?;
    let too_large = || Error::TooLarge {
        what: "Lindenbaum-Tarski carrier size",
        requested: 1u128.checked_shl(models.len() as u32).unwrap_or(u128::MAX),
        cap: cap as u128,
    };
    if models.len() >= usize::BITS as usize - 1 || 1usize << models.len() > cap {
        return Err(too_large());
    }
    let sets = PowerSetAlgebra::new(models.iter().map(|i| format!("h{i}")))
        .map_err(|_| too_large())?;
    Ok(LtAlgebra {
        theory: t.clone(),
        models,
        sets,
    })
}

impl LtAlgebra {
    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn universe(&self) -> &Universe {
        self.theory.universe()
    }

    /// Canonical assignment indices of the `T`-models, ascending.
    pub fn models(&self) -> &[usize] {
        &self.models
    }

    pub fn model_assignments(&self) -> impl Iterator<Item = Assignment> + '_ {
        self.models
            .iter()
            .map(|&i| Assignment::from_index(self.universe(), i))
    }

    pub fn as_power_set(&self) -> &PowerSetAlgebra {
        &self.sets
    }

    /// `T` has a model, equivalently `0 ≠ 1`.
    pub fn consistency(&self) -> bool {
        !self.models.is_empty()
    }

    /// Canonical assignment indices of the models in class `c`.
    pub fn model_set(&self, c: ElementId) -> Vec<usize> {
        self.models
            .iter()
            .enumerate()
            .filter(|(j, _)| c.0 >> j & 1 == 1)
            .map(|(_, &i)| i)
            .collect()
    }

    /// The element `[α]`.
    pub fn element_of(&self, f: &Formula) -> Result<ElementId> {
        self.universe().covers(f)?;
        let mut mask = 0;
        for (j, &i) in self.models.iter().enumerate() {
            if self.universe().eval_index(f, i)? {
                mask |= 1 << j;
            }
        }
        Ok(ElementId(mask))
    }

    pub fn class_of(&self, f: &Formula) -> Result<EquivClass> {
        Ok(EquivClass {
            model_set: self.element_of(f)?,
            representative: f.clone(),
        })
    }

    /// A formula in class `c`: `α₀ ∧ ¬α₀` for 0, `α₀ ∨ ¬α₀` for 1 (with `α₀`
    /// the first variable), otherwise the disjunction over `c`'s models of
    /// the conjunction of their literals.
    pub fn representative_formula(&self, c: ElementId) -> Result<Formula> {
        self.check_element(c)?;
        let first = self.universe().names().first().ok_or_else(|| {
            Error::Argument("an empty universe has no formulas to represent classes".into())
        })?;
        let alpha = Formula::var(first.clone());
        if c == self.zero() {
            return Ok(Formula::and(alpha.clone(), Formula::not(alpha)));
        }
        if c == self.one() {
            return Ok(Formula::or(alpha.clone(), Formula::not(alpha)));
        }
        let conjunct = |h: Assignment| {
            h.universe()
                .names()
                .iter()
                .zip(h.values())
                .map(|(name, &value)| {
                    let v = Formula::var(name.clone());
                    if value {
                        v
                    } else {
                        Formula::not(v)
                    }
                })
                .reduce(Formula::and)
                .expect("universe is nonempty")
        };
        Ok(self
            .model_set(c)
            .into_iter()
            .map(|i| conjunct(Assignment::from_index(self.universe(), i)))
            .reduce(Formula::or)
            .expect("class is nonzero"))
    }

    pub fn class_for(&self, c: ElementId) -> Result<EquivClass> {
        Ok(EquivClass {
            model_set: c,
            representative: self.representative_formula(c)?,
        })
    }
}

impl BooleanAlgebra for LtAlgebra {
    fn size(&self) -> usize {
        self.sets.size()
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.sets.join(x, y)
    }

    fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.sets.meet(x, y)
    }

    fn complement(&self, x: ElementId) -> ElementId {
        self.sets.complement(x)
    }

    fn zero(&self) -> ElementId {
        self.sets.zero()
    }

    fn one(&self) -> ElementId {
        self.sets.one()
    }

    fn element_name(&self, x: ElementId) -> String {
        self.sets.element_name(x)
    }

    fn find(&self, name: &str) -> Option<ElementId> {
        self.sets.find(name)
    }
}

/// The quotient map `π: B_L(∅) → B_L(T)` as an element map, sending the
/// class with model set `M` to the class with model set `M ∩ Mod(T)`.
pub fn projection(lt_empty: &LtAlgebra, lt_t: &LtAlgebra) -> Result<Vec<ElementId>> {
    if lt_empty.universe() != lt_t.universe() {
        return Err(Error::Argument(
            "projection needs both algebras over the same variables".into(),
        ));
    }
    if lt_empty.models.len() != lt_empty.universe().assignment_count() {
        return Err(Error::Argument(
            "projection source must be the algebra of the empty theory".into(),
        ));
    }
    Ok(lt_empty
        .elements()
        .map(|m| {
            let mask = lt_t
                .models
                .iter()
                .enumerate()
                .filter(|(_, &i)| m.0 >> i & 1 == 1)
                .fold(0, |acc, (j, _)| acc | 1 << j);
            ElementId(mask)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_homomorphism, verify_axioms};
    use crate::logic::parse;

    fn theory(vars: &[&str], formulas: &[&str]) -> Theory {
        let u = Universe::new(vars.iter().copied()).unwrap();
        Theory::new(u, formulas.iter().map(|f| parse(f).unwrap()).collect()).unwrap()
    }

    #[test]
    fn carrier_sizes() {
        assert_eq!(build_lt_algebra(&theory(&["P"], &[])).unwrap().size(), 4);
        let bot = build_lt_algebra(&theory(&["P"], &["P", "~P"])).unwrap();
        assert_eq!(bot.size(), 1);
        assert!(bot.is_trivial());
        assert!(!bot.consistency());
        let lt = build_lt_algebra(&theory(&["P", "Q"], &["P"])).unwrap();
        assert_eq!(lt.size(), 4);
        assert_eq!(lt.models(), [2, 3]);
    }

    #[test]
    fn size_cap() {
        let t = theory(&["P", "Q", "R"], &[]);
        assert!(build_lt_algebra_with_cap(&t, 255).unwrap_err().is_size_refusal());
        assert_eq!(build_lt_algebra_with_cap(&t, 256).unwrap().size(), 256);
        let t = theory(&["A", "B", "C", "D"], &[]);
        assert!(build_lt_algebra(&t).unwrap_err().is_size_refusal());
    }

    #[test]
    fn classes_of_constants() {
        let lt = build_lt_algebra(&theory(&["P", "Q"], &[])).unwrap();
        assert_eq!(lt.element_of(&parse("P | ~P").unwrap()).unwrap(), lt.one());
        assert_eq!(lt.element_of(&parse("P & ~P").unwrap()).unwrap(), lt.zero());
        let lt = build_lt_algebra(&theory(&["P", "Q"], &["P"])).unwrap();
        assert_eq!(lt.element_of(&parse("P").unwrap()).unwrap(), lt.one());
        assert!(lt.element_of(&parse("R").unwrap()).is_err());
    }

    #[test]
    fn classes_compare_by_model_set() {
        let lt = build_lt_algebra(&theory(&["P", "Q"], &[])).unwrap();
        let a = lt.class_of(&parse("P -> Q").unwrap()).unwrap();
        let b = lt.class_of(&parse("~P | Q").unwrap()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.representative, b.representative);
    }

    #[test]
    fn projection_examples() {
        let empty = build_lt_algebra(&theory(&["P"], &[])).unwrap();
        let t = build_lt_algebra(&theory(&["P"], &["P"])).unwrap();
        let pi = projection(&empty, &t).unwrap();
        assert!(check_homomorphism(&pi, &empty, &t).unwrap());
        assert_eq!(pi[empty.one().0], t.one());
        assert_eq!(pi[empty.zero().0], t.zero());
        let p = empty.element_of(&parse("P").unwrap()).unwrap();
        assert_eq!(pi[p.0], t.one());

        let bot = build_lt_algebra(&theory(&["P"], &["P", "~P"])).unwrap();
        let pi = projection(&empty, &bot).unwrap();
        assert!(pi.iter().all(|&c| c == bot.zero()));

        let other = build_lt_algebra(&theory(&["Q"], &[])).unwrap();
        assert!(projection(&empty, &other).is_err());
        assert!(projection(&t, &empty).is_err());
    }

    #[test]
    fn representatives() {
        let lt = build_lt_algebra(&theory(&["P"], &[])).unwrap();
        assert_eq!(lt.representative_formula(lt.zero()).unwrap().to_string(), "P & ~P");
        assert_eq!(lt.representative_formula(lt.one()).unwrap().to_string(), "P | ~P");

        let lt = build_lt_algebra(&theory(&["P", "Q"], &[])).unwrap();
        let c = lt.element_of(&parse("P & ~Q").unwrap()).unwrap();
        let rep = lt.representative_formula(c).unwrap();
        assert_eq!(rep.to_string(), "P & ~Q");
        assert_eq!(lt.element_of(&rep).unwrap(), c);

        let empty_universe = build_lt_algebra(&theory(&[], &[])).unwrap();
        assert_eq!(empty_universe.size(), 2);
        assert!(empty_universe.representative_formula(ElementId(0)).is_err());
    }

    #[test]
    fn passes_axioms() {
        let lt = build_lt_algebra(&theory(&["P", "Q"], &["P | Q"])).unwrap();
        assert!(verify_axioms(&lt).unwrap().all_pass());
    }
}
