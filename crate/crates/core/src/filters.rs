//! Filters and ultrafilters of finite Boolean algebras.
//!
//! A filter is a set `p` with `1 ∈ p` and `x·y ∈ p ⇔ x ∈ p ∧ y ∈ p`; an
//! ultrafilter additionally holds exactly one of `x`, `−x` for every `x`.
//! On finite carriers every filter is principal, which the operations here
//! lean on: the filter generated by a set is the principal filter of the
//! meet of its members, and the greedy extension in
//! [`extend_to_ultrafilter`] stands in for a maximality argument.

use crate::algebra::{atoms, BooleanAlgebra, ElementId, DEFAULT_CARRIER_CAP};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Largest carrier the subset brute-force routines accept.
pub const BRUTE_FORCE_CAP: usize = 16;

/// A validated filter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter {
    members: ElementSet,
}

impl Filter {
    pub fn new<A: BooleanAlgebra + ?Sized>(a: &A, members: ElementSet) -> Result<Self> {
        if is_filter(a, &members)? {
            Ok(Filter { members })
        } else {
            Err(Error::Precondition("set is not a filter".into()))
        }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.contains_id(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper<A: BooleanAlgebra + ?Sized>(&self, a: &A) -> bool {
        !self.contains(a.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.ids()
    }
}

/// A filter validated to contain exactly one of `x`, `−x` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ultrafilter(Filter);

impl Ultrafilter {
    pub fn new<A: BooleanAlgebra + ?Sized>(a: &A, members: ElementSet) -> Result<Self> {
        if is_ultrafilter(a, &members)? {
            Ok(Ultrafilter(Filter { members }))
        } else {
            Err(Error::Precondition("set is not an ultrafilter".into()))
        }
    }

    pub fn as_filter(&self) -> &Filter {
        &self.0
    }

    pub fn members(&self) -> &ElementSet {
        &self.0.members
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter()
    }
}

/// Collects element ids into a set over `a`'s carrier, rejecting strangers.
pub fn subset_of<A: BooleanAlgebra + ?Sized>(
    a: &A,
    ids: impl IntoIterator<Item = ElementId>,
) -> Result<ElementSet> {
    let mut set = ElementSet::empty(a.size());
    for x in ids {
        a.check_element(x)?;
        set.insert(x.0);
    }
    Ok(set)
}

fn check_universe<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> Result<()> {
    if s.universe() != a.size() {
        return Err(Error::Argument(format!(
            "set ranges over {} elements but the carrier has {}",
            s.universe(),
            a.size()
        )));
    }
    Ok(())
}

pub fn is_filter<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> Result<bool> {
    check_universe(a, s)?;
    if !s.contains_id(a.one()) {
        return Ok(false);
    }
    for x in a.elements() {
        let in_x = s.contains_id(x);
        for y in a.elements() {
            if s.contains_id(a.meet(x, y)) != (in_x && s.contains_id(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn principal_set<A: BooleanAlgebra + ?Sized>(a: &A, x: ElementId) -> ElementSet {
    ElementSet::from_ids(a.size(), a.elements().filter(|&y| a.meet(y, x) == x))
}

/// `{y : y·x = x}`, the elements above `x`.
pub fn principal_filter<A: BooleanAlgebra + ?Sized>(a: &A, x: ElementId) -> Result<Filter> {
    a.check_element(x)?;
    Ok(Filter {
        members: principal_set(a, x),
    })
}

fn meet_of<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> ElementId {
    s.ids().fold(a.one(), |acc, x| a.meet(acc, x))
}

/// The smallest filter containing `s`: the principal filter of the meet of
/// `s` (the empty meet being 1).
pub fn filter_generated_by<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> Result<Filter> {
    check_universe(a, s)?;
    principal_filter(a, meet_of(a, s))
}

pub fn is_ultrafilter<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> Result<bool> {
    if !is_filter(a, s)? {
        return Ok(false);
    }
    Ok(a.elements().all(|x| {
        let with_x = s.contains_id(x);
        let with_complement = s.contains_id(a.complement(x));
        with_x != with_complement
    }))
}

/// Proper, and no proper filter strictly contains it. Tested by checking
/// that adding any outside element generates the whole carrier.
pub fn is_maximal<A: BooleanAlgebra + ?Sized>(a: &A, s: &ElementSet) -> Result<bool> {
    if !is_filter(a, s)? || s.contains_id(a.zero()) {
        return Ok(false);
    }
    for x in a.elements().filter(|&x| !s.contains_id(x)) {
        let mut extended = s.clone();
        extended.insert(x.0);
        if filter_generated_by(a, &extended)?.is_proper(a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends a proper filter to an ultrafilter.
///
/// Walks the carrier in canonical order and adds each element whose
/// addition keeps the generated filter proper. Since the current filter is
/// always principal at some `m`, adding `x` generates the principal filter
/// at `m·x`, which is proper iff `m·x ≠ 0`.
pub fn extend_to_ultrafilter<A: BooleanAlgebra + ?Sized>(a: &A, f: &Filter) -> Result<Ultrafilter> {
    check_universe(a, f.members())?;
    if !f.is_proper(a) {
        return Err(Error::Precondition(
            "cannot extend an improper filter to an ultrafilter".into(),
        ));
    }
    let zero = a.zero();
    let mut generator = meet_of(a, f.members());
    for x in a.elements() {
        let candidate = a.meet(generator, x);
        if candidate != generator && candidate != zero {
            generator = candidate;
        }
    }
    let members = principal_set(a, generator);
    debug_assert!(f.members().is_subset(&members));
    Ok(Ultrafilter(Filter { members }))
}

pub fn enumerate_ultrafilters<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<Vec<Ultrafilter>> {
    enumerate_ultrafilters_with_cap(a, DEFAULT_CARRIER_CAP)
}

/// All ultrafilters, as principal filters at the atoms, ordered by atom.
/// Each one is validated against the definition.
pub fn enumerate_ultrafilters_with_cap<A: BooleanAlgebra + ?Sized>(
    a: &A,
    cap: usize,
) -> Result<Vec<Ultrafilter>> {
    if a.size() > cap {
        return Err(Error::TooLarge {
            what: "carrier size",
            requested: a.size() as u128,
            cap: cap as u128,
        });
    }
    atoms(a)
        .into_iter()
        .map(|atom| {
            Ultrafilter::new(a, principal_set(a, atom))
                .map_err(|_| Error::Precondition("algebra is not a Boolean algebra".into()))
        })
        .collect()
}

/// Primality: `x+y ∈ U ⇒ x ∈ U ∨ y ∈ U` and `x·y ∈ U ⇒ x ∈ U ∧ y ∈ U`.
pub fn check_ultrafilter_prime<A: BooleanAlgebra + ?Sized>(a: &A, u: &Ultrafilter) -> bool {
    if u.members().universe() != a.size() {
        return false;
    }
    a.elements().all(|x| {
        a.elements().all(|y| {
            let join_ok = !u.contains(a.join(x, y)) || u.contains(x) || u.contains(y);
            let meet_ok = !u.contains(a.meet(x, y)) || (u.contains(x) && u.contains(y));
            join_ok && meet_ok
        })
    })
}

/// Enumerations straight from the definitions over all `2^n` subsets, used as oracles for
/// the structural routes above. Limited to carriers of [`BRUTE_FORCE_CAP`].
pub mod oracle {
    use super::*;

    fn check_cap<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<()> {
        if a.size() > BRUTE_FORCE_CAP {
            return Err(Error::TooLarge {
                what: "carrier size for subset brute force",
                requested: a.size() as u128,
                cap: BRUTE_FORCE_CAP as u128,
            });
        }
        Ok(())
    }

    fn is_filter_mask<A: BooleanAlgebra + ?Sized>(a: &A, mask: u64) -> bool {
        let has = |x: ElementId| mask & (1 << x.0) != 0;
        has(a.one())
            && a.elements().all(|x| {
                a.elements()
                    .all(|y| has(a.meet(x, y)) == (has(x) && has(y)))
            })
    }

    fn all_filters<A: BooleanAlgebra + ?Sized>(a: &A) -> Vec<u64> {
        (0..1u64 << a.size())
            .filter(|&m| is_filter_mask(a, m))
            .collect()
    }

    /// Every subset satisfying the ultrafilter definition, in ascending encoding.
    pub fn ultrafilters<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<Vec<ElementSet>> {
        check_cap(a)?;
        let n = a.size();
        Ok(all_filters(a)
            .into_iter()
            .filter(|&m| {
                let has = |x: ElementId| m & (1 << x.0) != 0;
                a.elements().all(|x| has(x) != has(a.complement(x)))
            })
            .map(|m| ElementSet::from_mask(n, m))
            .collect())
    }

    /// Proper filters not strictly contained in another proper filter, in
    /// ascending encoding. Both sides of the comparison come from the full
    /// list of filters.
    pub fn maximal_filters<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<Vec<ElementSet>> {
        check_cap(a)?;
        let n = a.size();
        let zero_bit = 1u64 << a.zero().0;
        let proper: Vec<u64> = all_filters(a)
            .into_iter()
            .filter(|&m| m & zero_bit == 0)
            .collect();
        Ok(proper
            .iter()
            .copied()
            .filter(|&m| !proper.iter().any(|&q| q != m && q & m == m))
            .map(|m| ElementSet::from_mask(n, m))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteAlgebra, PowerSetAlgebra};

    fn p(ground: &[&str]) -> PowerSetAlgebra {
        PowerSetAlgebra::new(ground.iter().copied()).unwrap()
    }

    fn set(a: &PowerSetAlgebra, elems: &[&[&str]]) -> ElementSet {
        subset_of(a, elems.iter().map(|e| a.subset(e.iter().copied()).unwrap())).unwrap()
    }

    #[test]
    fn is_filter_examples() {
        let a = p(&["1", "2"]);
        assert!(is_filter(&a, &set(&a, &[&["1"], &["1", "2"]])).unwrap());
        assert!(!is_filter(&a, &set(&a, &[&["1"]])).unwrap());
        assert!(is_filter(&a, &ElementSet::full(a.size())).unwrap());
    }

    #[test]
    fn out_of_carrier_member_is_an_argument_error() {
        let a = p(&["1", "2"]);
        assert!(subset_of(&a, [ElementId(4)]).is_err());
        assert!(matches!(
            is_filter(&a, &ElementSet::empty(5)),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn principal_filter_examples() {
        let a = p(&["1", "2", "3"]);
        let f = principal_filter(&a, a.subset(["1", "2"]).unwrap()).unwrap();
        assert_eq!(f.members(), &set(&a, &[&["1", "2"], &["1", "2", "3"]]));
        assert!(principal_filter(&a, a.zero()).unwrap().members().is_full());
        assert_eq!(
            principal_filter(&a, a.one()).unwrap().members(),
            &set(&a, &[&["1", "2", "3"]])
        );
    }

    #[test]
    fn filter_generated_by_examples() {
        let a = p(&["1", "2", "3"]);
        let empty = filter_generated_by(&a, &ElementSet::empty(8)).unwrap();
        assert_eq!(empty.members(), &set(&a, &[&["1", "2", "3"]]));

        let s = set(&a, &[&["1", "2"], &["2", "3"]]);
        assert_eq!(
            filter_generated_by(&a, &s).unwrap(),
            principal_filter(&a, a.subset(["2"]).unwrap()).unwrap()
        );

        let x = a.subset(["1"]).unwrap();
        let s = subset_of(&a, [x, a.complement(x)]).unwrap();
        assert!(filter_generated_by(&a, &s).unwrap().members().is_full());
    }

    #[test]
    fn ultrafilter_and_maximal_examples() {
        let a = p(&["1", "2"]);
        let u = set(&a, &[&["1"], &["1", "2"]]);
        assert!(is_ultrafilter(&a, &u).unwrap());
        assert!(is_maximal(&a, &u).unwrap());
        let top = set(&a, &[&["1", "2"]]);
        assert!(!is_ultrafilter(&a, &top).unwrap());
        assert!(!is_maximal(&a, &top).unwrap());

        let t = FiniteAlgebra::trivial();
        for s in [ElementSet::empty(1), ElementSet::full(1)] {
            assert!(!is_ultrafilter(&t, &s).unwrap());
            assert!(!is_maximal(&t, &s).unwrap());
        }
    }

    #[test]
    fn greedy_extension_examples() {
        let a = p(&["1", "2"]);
        let unit = principal_filter(&a, a.one()).unwrap();
        let u = extend_to_ultrafilter(&a, &unit).unwrap();
        assert_eq!(u.members(), &set(&a, &[&["1"], &["1", "2"]]));

        let again = extend_to_ultrafilter(&a, u.as_filter()).unwrap();
        assert_eq!(again, u);

        let b = p(&["1", "2", "3"]);
        let f = principal_filter(&b, b.subset(["1", "2"]).unwrap()).unwrap();
        let u = extend_to_ultrafilter(&b, &f).unwrap();
        assert_eq!(
            u.as_filter(),
            &principal_filter(&b, b.subset(["1"]).unwrap()).unwrap()
        );
        assert!(is_ultrafilter(&b, u.members()).unwrap());
    }

    #[test]
    fn improper_filter_cannot_be_extended() {
        let a = p(&["1"]);
        let all = principal_filter(&a, a.zero()).unwrap();
        assert!(matches!(
            extend_to_ultrafilter(&a, &all),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn enumeration_examples() {
        let a = p(&["1", "2", "3"]);
        let us = enumerate_ultrafilters(&a).unwrap();
        assert_eq!(us.len(), 3);
        for (i, u) in us.iter().enumerate() {
            assert_eq!(u.as_filter(), &principal_filter(&a, a.singleton(i)).unwrap());
            assert!(check_ultrafilter_prime(&a, u));
        }
        assert!(enumerate_ultrafilters(&FiniteAlgebra::trivial())
            .unwrap()
            .is_empty());
        let two = FiniteAlgebra::two();
        let us = enumerate_ultrafilters(&two).unwrap();
        assert_eq!(us.len(), 1);
        assert_eq!(us[0].members(), &ElementSet::from_indices(2, [1]));
        assert!(check_ultrafilter_prime(&two, &us[0]));
        assert!(enumerate_ultrafilters_with_cap(&a, 4).unwrap_err().is_size_refusal());
    }

    #[test]
    fn brute_force_oracle_on_two_element_algebra() {
        let two = FiniteAlgebra::two();
        assert_eq!(
            oracle::ultrafilters(&two).unwrap(),
            vec![ElementSet::from_indices(2, [1])]
        );
        assert_eq!(
            oracle::maximal_filters(&two).unwrap(),
            vec![ElementSet::from_indices(2, [1])]
        );
        let big = p(&["a", "b", "c", "d", "e"]);
        assert!(oracle::ultrafilters(&big).unwrap_err().is_size_refusal());
    }
}
