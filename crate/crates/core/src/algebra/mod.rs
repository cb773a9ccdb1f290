//! Finite Boolean algebras.
//!
//! Every algebra here implements [`BooleanAlgebra`]: a carrier of `size()`
//! elements addressed by [`ElementId`] in canonical order, plus total
//! operations. Two concrete forms exist: [`FiniteAlgebra`] stores explicit
//! operation tables, [`PowerSetAlgebra`] computes with characteristic bit
//! vectors and materializes to tables on demand.

mod axioms;
mod format;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use axioms::{
    check_complement_uniqueness, check_de_morgan, verify_axioms, verify_axioms_with_cap, Axiom,
    AxiomOutcome, AxiomReport, Counterexample,
};
pub use format::{load_algebra, AlgebraDocument, LoadedAlgebra};

/// Default ceiling on carrier sizes for table materialization, axiom checks
/// and ultrafilter enumeration.
pub const DEFAULT_CARRIER_CAP: usize = 1 << 12;

/// Largest ground set a [`PowerSetAlgebra`] accepts.
pub const MAX_GROUND: usize = 32;

/// Index of an element in its algebra's canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite structure `(B, +, ·, −, 0, 1)`.
///
/// Implementations must be total on `0..size()`. Nothing here assumes the
/// axioms hold; use [`verify_axioms`] for that. `zero` and `one` may coincide.
pub trait BooleanAlgebra {
    fn size(&self) -> usize;
    fn join(&self, x: ElementId, y: ElementId) -> ElementId;
    fn meet(&self, x: ElementId, y: ElementId) -> ElementId;
    fn complement(&self, x: ElementId) -> ElementId;
    fn zero(&self) -> ElementId;
    fn one(&self) -> ElementId;
    fn element_name(&self, x: ElementId) -> String;

    fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.size()).map(ElementId)
    }

    fn contains(&self, x: ElementId) -> bool {
        x.0 < self.size()
    }

    /// `x ≤ y` iff `x · y = x`.
    fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.meet(x, y) == x
    }

    fn is_trivial(&self) -> bool {
        self.zero() == self.one()
    }

    fn check_element(&self, x: ElementId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: x.0,
                size: self.size(),
            })
        }
    }

    fn checked_join(&self, x: ElementId, y: ElementId) -> Result<ElementId> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.join(x, y))
    }

    fn checked_meet(&self, x: ElementId, y: ElementId) -> Result<ElementId> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.meet(x, y))
    }

    fn checked_complement(&self, x: ElementId) -> Result<ElementId> {
        self.check_element(x)?;
        Ok(self.complement(x))
    }

    fn checked_leq(&self, x: ElementId, y: ElementId) -> Result<bool> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.leq(x, y))
    }

    /// Looks an element up by display name.
    fn find(&self, name: &str) -> Option<ElementId> {
        self.elements().find(|&x| self.element_name(x) == name)
    }
}

/// An algebra given by explicit operation tables.
///
/// Carrier order is the order the elements were supplied in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    join: Vec<u32>,
    meet: Vec<u32>,
    complement: Vec<u32>,
    zero: u32,
    one: u32,
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major tables, rejecting anything that is not
    /// total or not closed over the carrier.
    pub fn from_tables(
        names: Vec<String>,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        complement: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Structure("carrier is empty".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::Structure("carrier too large for table form".into()));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(j) = seen.insert(name.as_str(), i) {
                return Err(Error::Structure(format!(
                    "element name {name:?} used for both {j} and {i}"
                )));
            }
        }
        let flatten = |table: Vec<Vec<usize>>, label: &str| -> Result<Vec<u32>> {
            if table.len() != n {
                return Err(Error::Structure(format!(
                    "{label} table has {} rows, expected {n}",
                    table.len()
                )));
            }
            let mut flat = Vec::with_capacity(n * n);
            for (r, row) in table.into_iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Structure(format!(
                        "{label} table row {r} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (c, v) in row.into_iter().enumerate() {
                    if v >= n {
                        return Err(Error::Structure(format!(
                            "{label}[{r}][{c}] = {v} is outside the carrier"
                        )));
                    }
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let join = flatten(join, "join")?;
        let meet = flatten(meet, "meet")?;
        if complement.len() != n {
            return Err(Error::Structure(format!(
                "complement table has {} entries, expected {n}",
                complement.len()
            )));
        }
        if let Some((i, v)) = complement.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Structure(format!(
                "complement[{i}] = {v} is outside the carrier"
            )));
        }
        for (label, v) in [("zero", zero), ("one", one)] {
            if v >= n {
                return Err(Error::Structure(format!("{label} = {v} is outside the carrier")));
            }
        }
        Ok(FiniteAlgebra {
            names,
            join,
            meet,
            complement: complement.into_iter().map(|v| v as u32).collect(),
            zero: zero as u32,
            one: one as u32,
        })
    }

    /// Copies any algebra into table form.
    pub fn materialize<A: BooleanAlgebra + ?Sized>(a: &A, cap: usize) -> Result<Self> {
        let n = a.size();
        if n > cap {
            return Err(Error::TooLarge {
                what: "carrier size",
                requested: n as u128,
                cap: cap as u128,
            });
        }
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for x in a.elements() {
            for y in a.elements() {
                join.push(a.join(x, y).0 as u32);
                meet.push(a.meet(x, y).0 as u32);
            }
        }
        let out = FiniteAlgebra {
            names: a.elements().map(|x| a.element_name(x)).collect(),
            join,
            meet,
            complement: a.elements().map(|x| a.complement(x).0 as u32).collect(),
            zero: a.zero().0 as u32,
            one: a.one().0 as u32,
        };
        out.validate()?;
        Ok(out)
    }

    /// The one-element algebra, where `0 = 1`.
    pub fn trivial() -> Self {
        FiniteAlgebra {
            names: vec!["0".into()],
            join: vec![0],
            meet: vec![0],
            complement: vec![0],
            zero: 0,
            one: 0,
        }
    }

    /// The two-element algebra `{0, 1}`.
    pub fn two() -> Self {
        FiniteAlgebra {
            names: vec!["0".into(), "1".into()],
            join: vec![0, 1, 1, 1],
            meet: vec![0, 0, 0, 1],
            complement: vec![1, 0],
            zero: 0,
            one: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.names.len() as u32;
        let bad = self
            .join
            .iter()
            .chain(&self.meet)
            .chain(&self.complement)
            .chain([&self.zero, &self.one])
            .any(|&v| v >= n);
        if bad {
            return Err(Error::Structure("table entry outside the carrier".into()));
        }
        Ok(())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn join_row(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        let n = self.names.len();
        self.join[x.0 * n..(x.0 + 1) * n].iter().map(|&v| ElementId(v as usize))
    }

    pub fn meet_row(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        let n = self.names.len();
        self.meet[x.0 * n..(x.0 + 1) * n].iter().map(|&v| ElementId(v as usize))
    }

    /// Returns an isomorphic copy in which old element `i` becomes element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.names.len();
        if perm.len() != n {
            return Err(Error::Argument(format!(
                "permutation has {} entries for a carrier of {n}",
                perm.len()
            )));
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::Argument("relabeling is not a permutation".into()));
            }
        }
        let mut inverse = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for &ox in &inverse {
            for &oy in &inverse {
                join.push(perm[self.join[ox * n + oy] as usize] as u32);
                meet.push(perm[self.meet[ox * n + oy] as usize] as u32);
            }
        }
        Ok(FiniteAlgebra {
            names: inverse.iter().map(|&o| self.names[o].clone()).collect(),
            join,
            meet,
            complement: inverse
                .iter()
                .map(|&o| perm[self.complement[o] as usize] as u32)
                .collect(),
            zero: perm[self.zero as usize] as u32,
            one: perm[self.one as usize] as u32,
        })
    }
}

impl BooleanAlgebra for FiniteAlgebra {
    fn size(&self) -> usize {
        self.names.len()
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.join[x.0 * self.names.len() + y.0] as usize)
    }

    fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.meet[x.0 * self.names.len() + y.0] as usize)
    }

    fn complement(&self, x: ElementId) -> ElementId {
        ElementId(self.complement[x.0] as usize)
    }

    fn zero(&self) -> ElementId {
        ElementId(self.zero as usize)
    }

    fn one(&self) -> ElementId {
        ElementId(self.one as usize)
    }

    fn element_name(&self, x: ElementId) -> String {
        self.names[x.0].clone()
    }

    fn find(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId)
    }
}

/// The power-set algebra `P(X)` of a finite ground set `X`.
///
/// Element `i` is the subset whose characteristic vector over `ground` has
/// numeric value `i` (ground atom `j` has weight `2^j`), so canonical order
/// is ascending encoding, `0 = ∅` and `1 = X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSetAlgebra {
    ground: Vec<String>,
    full: usize,
}

impl PowerSetAlgebra {
    pub fn new<S: Into<String>>(ground: impl IntoIterator<Item = S>) -> Result<Self> {
        let ground: Vec<String> = ground.into_iter().map(Into::into).collect();
        if ground.len() > MAX_GROUND {
            return Err(Error::TooLarge {
                what: "ground set size",
                requested: ground.len() as u128,
                cap: MAX_GROUND as u128,
            });
        }
        for (i, a) in ground.iter().enumerate() {
            if ground[..i].contains(a) {
                return Err(Error::Argument(format!("ground atom {a:?} repeated")));
            }
        }
        let full = (1usize << ground.len()) - 1;
        Ok(PowerSetAlgebra { ground, full })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    /// The element whose members are the named ground atoms.
    pub fn subset<'a>(&self, atoms: impl IntoIterator<Item = &'a str>) -> Result<ElementId> {
        let mut mask = 0;
        for a in atoms {
            let j = self
                .ground
                .iter()
                .position(|g| g == a)
                .ok_or_else(|| Error::Argument(format!("{a:?} is not in the ground set")))?;
            mask |= 1 << j;
        }
        Ok(ElementId(mask))
    }

    /// Ground atoms belonging to element `x`.
    pub fn members(&self, x: ElementId) -> Vec<&str> {
        self.ground
            .iter()
            .enumerate()
            .filter(|(j, _)| x.0 & (1 << j) != 0)
            .map(|(_, g)| g.as_str())
            .collect()
    }

    pub fn singleton(&self, atom: usize) -> ElementId {
        assert!(atom < self.ground.len());
        ElementId(1 << atom)
    }

    pub fn materialize(&self, cap: usize) -> Result<FiniteAlgebra> {
        FiniteAlgebra::materialize(self, cap)
    }
}

impl BooleanAlgebra for PowerSetAlgebra {
    fn size(&self) -> usize {
        self.full + 1
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(x.0 | y.0)
    }

    fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(x.0 & y.0)
    }

    fn complement(&self, x: ElementId) -> ElementId {
        ElementId(!x.0 & self.full)
    }

    fn zero(&self) -> ElementId {
        ElementId(0)
    }

    fn one(&self) -> ElementId {
        ElementId(self.full)
    }

    fn element_name(&self, x: ElementId) -> String {
        format!("{{{}}}", self.members(x).join(","))
    }

    fn find(&self, name: &str) -> Option<ElementId> {
        let inner = name.strip_prefix('{')?.strip_suffix('}')?;
        if inner.is_empty() {
            return Some(ElementId(0));
        }
        self.subset(inner.split(',')).ok()
    }
}

/// A subalgebra in table form together with its inclusion map into the parent.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: FiniteAlgebra,
    pub inclusion: Vec<ElementId>,
}

/// Restricts the parent's operations to `elements`, which must contain 0 and
/// 1 and be closed under `+`, `·` and `−`. The result keeps the parent's
/// relative order.
pub fn subalgebra<A: BooleanAlgebra + ?Sized>(a: &A, elements: &[ElementId]) -> Result<Subalgebra> {
    for &x in elements {
        a.check_element(x)?;
    }
    let mut inclusion: Vec<ElementId> = elements.to_vec();
    inclusion.sort();
    inclusion.dedup();
    let position: HashMap<ElementId, usize> =
        inclusion.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let locate = |x: ElementId, what: &str| -> Result<usize> {
        position.get(&x).copied().ok_or_else(|| {
            Error::Argument(format!(
                "subset is not closed: {what} yields {} which is not a member",
                a.element_name(x)
            ))
        })
    };
    let zero = locate(a.zero(), "0")?;
    let one = locate(a.one(), "1")?;
    let mut join = Vec::with_capacity(inclusion.len());
    let mut meet = Vec::with_capacity(inclusion.len());
    for &x in &inclusion {
        let mut jr = Vec::with_capacity(inclusion.len());
        let mut mr = Vec::with_capacity(inclusion.len());
        for &y in &inclusion {
            jr.push(locate(a.join(x, y), "join")?);
            mr.push(locate(a.meet(x, y), "meet")?);
        }
        join.push(jr);
        meet.push(mr);
    }
    let complement = inclusion
        .iter()
        .map(|&x| locate(a.complement(x), "complement"))
        .collect::<Result<Vec<_>>>()?;
    let names = inclusion.iter().map(|&x| a.element_name(x)).collect();
    let algebra = FiniteAlgebra::from_tables(names, join, meet, complement, zero, one)?;
    Ok(Subalgebra { algebra, inclusion })
}

fn check_map<A, B>(f: &[ElementId], a: &A, b: &B) -> Result<()>
where
    A: BooleanAlgebra + ?Sized,
    B: BooleanAlgebra + ?Sized,
{
    if f.len() != a.size() {
        return Err(Error::Argument(format!(
            "map is defined on {} elements but the source has {}",
            f.len(),
            a.size()
        )));
    }
    for &y in f {
        b.check_element(y)?;
    }
    Ok(())
}

/// Whether `f` (given as the image of each source element) preserves 0, 1,
/// `+`, `·` and `−`.
pub fn check_homomorphism<A, B>(f: &[ElementId], a: &A, b: &B) -> Result<bool>
where
    A: BooleanAlgebra + ?Sized,
    B: BooleanAlgebra + ?Sized,
{
    check_map(f, a, b)?;
    let img = |x: ElementId| f[x.0];
    if img(a.zero()) != b.zero() || img(a.one()) != b.one() {
        return Ok(false);
    }
    for x in a.elements() {
        if img(a.complement(x)) != b.complement(img(x)) {
            return Ok(false);
        }
        for y in a.elements() {
            if img(a.join(x, y)) != b.join(img(x), img(y))
                || img(a.meet(x, y)) != b.meet(img(x), img(y))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A bijective homomorphism.
pub fn is_isomorphism<A, B>(f: &[ElementId], a: &A, b: &B) -> Result<bool>
where
    A: BooleanAlgebra + ?Sized,
    B: BooleanAlgebra + ?Sized,
{
    check_map(f, a, b)?;
    if a.size() != b.size() {
        return Ok(false);
    }
    let mut hit = vec![false; b.size()];
    for &y in f {
        if std::mem::replace(&mut hit[y.0], true) {
            return Ok(false);
        }
    }
    check_homomorphism(f, a, b)
}

/// Minimal nonzero elements, in canonical order.
pub fn atoms<A: BooleanAlgebra + ?Sized>(a: &A) -> Vec<ElementId> {
    let zero = a.zero();
    a.elements()
        .filter(|&x| x != zero)
        .filter(|&x| {
            !a.elements()
                .any(|y| y != zero && y != x && a.leq(y, x))
        })
        .collect()
}

/// The two-element algebra `{0, 1}` computed without tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwoElementAlgebra;

impl TwoElementAlgebra {
    pub const FALSE: ElementId = ElementId(0);
    pub const TRUE: ElementId = ElementId(1);

    pub fn from_bool(b: bool) -> ElementId {
        ElementId(b as usize)
    }
}

impl BooleanAlgebra for TwoElementAlgebra {
    fn size(&self) -> usize {
        2
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(x.0 | y.0)
    }

    fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(x.0 & y.0)
    }

    fn complement(&self, x: ElementId) -> ElementId {
        ElementId(1 - x.0)
    }

    fn zero(&self) -> ElementId {
        Self::FALSE
    }

    fn one(&self) -> ElementId {
        Self::TRUE
    }

    fn element_name(&self, x: ElementId) -> String {
        x.0.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ground: &[&str]) -> PowerSetAlgebra {
        PowerSetAlgebra::new(ground.iter().copied()).unwrap()
    }

    #[test]
    fn power_set_operations() {
        let a = p(&["1", "2"]);
        let one = a.subset(["1"]).unwrap();
        let two = a.subset(["2"]).unwrap();
        assert_eq!(a.complement(one), two);
        assert_eq!(a.meet(one, two), a.zero());
        assert_eq!(a.element_name(a.one()), "{1,2}");
        assert_eq!(a.element_name(a.zero()), "{}");
        assert_eq!(a.find("{2}"), Some(two));
    }

    #[test]
    fn out_of_carrier_arguments_are_rejected() {
        let a = FiniteAlgebra::two();
        assert_eq!(
            a.checked_join(ElementId(0), ElementId(2)),
            Err(Error::ElementOutOfRange { index: 2, size: 2 })
        );
        assert!(a.checked_complement(ElementId(5)).is_err());
        assert!(p(&["a"]).checked_meet(ElementId(2), ElementId(0)).is_err());
    }

    #[test]
    fn leq_examples() {
        let a = p(&["1", "2", "3"]);
        for x in a.elements() {
            assert!(a.leq(a.zero(), x));
            assert_eq!(a.leq(a.one(), x), x == a.one());
        }
        assert!(a.leq(a.subset(["1"]).unwrap(), a.subset(["1", "2"]).unwrap()));
    }

    #[test]
    fn atoms_examples() {
        let a = p(&["1", "2", "3"]);
        assert_eq!(atoms(&a), vec![ElementId(1), ElementId(2), ElementId(4)]);
        let two = FiniteAlgebra::two();
        assert_eq!(atoms(&two), vec![two.one()]);
        assert!(atoms(&FiniteAlgebra::trivial()).is_empty());
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let names = vec!["0".to_string(), "1".to_string()];
        let err = FiniteAlgebra::from_tables(
            names.clone(),
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![0, 0], vec![0, 1]],
            vec![1, 0],
            0,
            1,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        let err = FiniteAlgebra::from_tables(
            names,
            vec![vec![0, 1]],
            vec![vec![0, 0], vec![0, 1]],
            vec![1, 0],
            0,
            1,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }

    #[test]
    fn homomorphism_examples() {
        let a = p(&["a", "b"]);
        let id: Vec<_> = a.elements().collect();
        assert!(check_homomorphism(&id, &a, &a).unwrap());
        assert!(is_isomorphism(&id, &a, &a).unwrap());

        let two = FiniteAlgebra::two();
        let constant = vec![two.one(), two.one()];
        assert!(!check_homomorphism(&constant, &two, &two).unwrap());

        let partial = vec![two.zero()];
        assert!(matches!(
            check_homomorphism(&partial, &two, &two),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn subalgebra_inclusion_is_homomorphism_not_isomorphism() {
        let a = p(&["1", "2", "3"]);
        let elems = [
            a.zero(),
            a.subset(["1"]).unwrap(),
            a.subset(["2", "3"]).unwrap(),
            a.one(),
        ];
        let sub = subalgebra(&a, &elems).unwrap();
        assert_eq!(sub.algebra.size(), 4);
        assert!(check_homomorphism(&sub.inclusion, &sub.algebra, &a).unwrap());
        assert!(!is_isomorphism(&sub.inclusion, &sub.algebra, &a).unwrap());

        let not_closed = [a.zero(), a.subset(["1"]).unwrap(), a.one()];
        assert!(subalgebra(&a, &not_closed).is_err());
    }

    #[test]
    fn relabel_gives_isomorphic_copy() {
        let a = p(&["x", "y"]).materialize(DEFAULT_CARRIER_CAP).unwrap();
        let perm = [2, 0, 3, 1];
        let b = a.relabel(&perm).unwrap();
        let f: Vec<_> = perm.iter().map(|&i| ElementId(i)).collect();
        assert!(is_isomorphism(&f, &a, &b).unwrap());
        assert_eq!(b.zero(), ElementId(2));
        assert!(a.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn materialize_respects_cap() {
        let a = p(&["a", "b", "c"]);
        assert!(a.materialize(4).unwrap_err().is_size_refusal());
        assert_eq!(a.materialize(8).unwrap().size(), 8);
    }
}
