//! The Stone map `s(x) = {p ∈ Ult A : x ∈ p}` and its verification as an
//! embedding into an algebra of sets over the ultrafilters.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::algebra::{is_isomorphism, BooleanAlgebra, ElementId, FiniteAlgebra, DEFAULT_CARRIER_CAP};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::filters::{enumerate_ultrafilters_with_cap, extend_to_ultrafilter, principal_filter, Ultrafilter};

/// The ultrafilters of an algebra and the Stone map over them.
#[derive(Clone, Debug)]
pub struct StoneMap {
    ultrafilters: Vec<Ultrafilter>,
    images: Vec<ElementSet>,
}

impl StoneMap {
    pub fn new<A: BooleanAlgebra + ?Sized>(a: &A, cap: usize) -> Result<Self> {
        let ultrafilters = enumerate_ultrafilters_with_cap(a, cap)?;
        let k = ultrafilters.len();
        let images = a
            .elements()
            .map(|x| {
                ElementSet::from_indices(
                    k,
                    ultrafilters
                        .iter()
                        .enumerate()
                        .filter(|(_, u)| u.contains(x))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Ok(StoneMap {
            ultrafilters,
            images,
        })
    }

    pub fn ultrafilters(&self) -> &[Ultrafilter] {
        &self.ultrafilters
    }

    /// Indices of the ultrafilters containing `x`.
    pub fn image(&self, x: ElementId) -> &ElementSet {
        &self.images[x.0]
    }

    pub fn images(&self) -> &[ElementSet] {
        &self.images
    }

    fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.ultrafilters.iter().position(|u| u.members() == members)
    }
}

/// `s(x)` as indices into the canonical ultrafilter list.
pub fn stone_map<A: BooleanAlgebra + ?Sized>(a: &A, x: ElementId) -> Result<ElementSet> {
    a.check_element(x)?;
    Ok(StoneMap::new(a, DEFAULT_CARRIER_CAP)?.image(x).clone())
}

/// Outcome of one identity checked over the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub equation: &'static str,
    /// First arguments (in canonical order) at which the identity fails.
    pub witness: Option<Vec<ElementId>>,
}

impl EquationCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// For a pair `x ≠ y`, an ultrafilter holding `inside` but not `outside`,
/// reached by extending the principal filter of `inside·−outside`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub inside: ElementId,
    pub outside: ElementId,
    pub ultrafilter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StoneReport {
    pub carrier_size: usize,
    pub ultrafilter_count: usize,
    pub zero_to_empty: bool,
    pub one_to_all: bool,
    pub join: EquationCheck,
    pub meet: EquationCheck,
    pub complement: EquationCheck,
    /// First pair with `s(x) = s(y)`, `x ≠ y`.
    pub collision: Option<(ElementId, ElementId)>,
    pub separations: Vec<Separation>,
    /// First pair for which no separating ultrafilter was found.
    pub unseparated: Option<(ElementId, ElementId)>,
    /// `|carrier| = 2^|Ult A|`. A property of finite algebras that goes beyond
    /// the embedding itself.
    pub finite_strengthening: bool,
    /// `s(x)` for each element in canonical order.
    pub table: Vec<Vec<usize>>,
}

impl StoneReport {
    pub fn injective(&self) -> bool {
        self.collision.is_none()
    }

    pub fn separated(&self) -> bool {
        self.unseparated.is_none()
    }

    /// The direct injectivity scan and the separating-ultrafilter route agree.
    pub fn routes_agree(&self) -> bool {
        self.injective() == self.separated()
    }

    pub fn homomorphism(&self) -> bool {
        self.zero_to_empty
            && self.one_to_all
            && self.join.holds()
            && self.meet.holds()
            && self.complement.holds()
    }

    pub fn is_embedding(&self) -> bool {
        self.homomorphism() && self.injective() && self.separated()
    }
}

pub fn verify_stone_embedding<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<StoneReport> {
    verify_stone_embedding_with_cap(a, DEFAULT_CARRIER_CAP)
}

/// Checks that `s` preserves 0, 1, `+`, `·`, `−` and is injective, both by a
/// direct pairwise scan and by exhibiting a separating ultrafilter for every
/// pair of distinct elements.
pub fn verify_stone_embedding_with_cap<A: BooleanAlgebra + ?Sized>(
    a: &A,
    cap: usize,
) -> Result<StoneReport> {
    let stone = StoneMap::new(a, cap)?;
    let k = stone.ultrafilters.len();
    let s = |x: ElementId| stone.image(x);

    let zero_to_empty = s(a.zero()).is_empty();
    let one_to_all = s(a.one()).is_full();

    let mut join = EquationCheck {
        equation: "s(x+y)=s(x)∪s(y)",
        witness: None,
    };
    let mut meet = EquationCheck {
        equation: "s(x·y)=s(x)∩s(y)",
        witness: None,
    };
    let mut complement = EquationCheck {
        equation: "s(−x)=Ult A∖s(x)",
        witness: None,
    };
    let mut collision = None;
    for x in a.elements() {
        if complement.witness.is_none() && *s(a.complement(x)) != s(x).complement() {
            complement.witness = Some(vec![x]);
        }
        for y in a.elements() {
            if join.witness.is_none() && *s(a.join(x, y)) != s(x).union(s(y)) {
                join.witness = Some(vec![x, y]);
            }
            if meet.witness.is_none() && *s(a.meet(x, y)) != s(x).intersection(s(y)) {
                meet.witness = Some(vec![x, y]);
            }
            if collision.is_none() && x < y && s(x) == s(y) {
                collision = Some((x, y));
            }
        }
    }

    let mut separations = Vec::new();
    let mut unseparated = None;
    let zero = a.zero();
    for x in a.elements() {
        for y in a.elements().filter(|&y| y > x) {
            match separate(a, &stone, x, y, zero)? {
                Some(sep) => separations.push(sep),
                None => {
                    if unseparated.is_none() {
                        unseparated = Some((x, y));
                    }
                }
            }
        }
    }

    let finite_strengthening = k < usize::BITS as usize && a.size() == 1usize << k;
    Ok(StoneReport {
        carrier_size: a.size(),
        ultrafilter_count: k,
        zero_to_empty,
        one_to_all,
        join,
        meet,
        complement,
        collision,
        separations,
        unseparated,
        finite_strengthening,
        table: stone.images.iter().map(|set| set.iter().collect()).collect(),
    })
}

/// Takes whichever of `x·−y`, `y·−x` is nonzero, extends its principal
/// filter to an ultrafilter and confirms it lies in the enumerated list and
/// holds one element of the pair but not the other.
fn separate<A: BooleanAlgebra + ?Sized>(
    a: &A,
    stone: &StoneMap,
    x: ElementId,
    y: ElementId,
    zero: ElementId,
) -> Result<Option<Separation>> {
    for (inside, outside) in [(x, y), (y, x)] {
        let separator = a.meet(inside, a.complement(outside));
        if separator == zero {
            continue;
        }
        let u = extend_to_ultrafilter(a, &principal_filter(a, separator)?)?;
        if !u.contains(inside) || u.contains(outside) {
            return Ok(None);
        }
        return Ok(stone.index_of(u.members()).map(|ultrafilter| Separation {
            inside,
            outside,
            ultrafilter,
        }));
    }
    Ok(None)
}

/// The algebra of sets over `Ult A` that the Stone map lands in.
#[derive(Clone, Debug)]
pub struct StoneImage {
    pub ultrafilters: Vec<Ultrafilter>,
    /// `s(x)` for each source element.
    pub map: Vec<ElementSet>,
    /// Closure of the image under union, intersection and relative
    /// complement, ordered by ascending encoding.
    pub image_algebra: FiniteAlgebra,
    /// `s` as a map from source elements to `image_algebra` elements.
    pub embedding: Vec<ElementId>,
    pub is_isomorphism: bool,
    /// `s` is onto the whole power set of `Ult A`, which holds for finite
    /// algebras but is more than the embedding statement.
    pub onto_full_power_set: bool,
}

pub fn build_stone_representation<A: BooleanAlgebra + ?Sized>(a: &A) -> Result<StoneImage> {
    build_stone_representation_with_cap(a, DEFAULT_CARRIER_CAP)
}

pub fn build_stone_representation_with_cap<A: BooleanAlgebra + ?Sized>(
    a: &A,
    cap: usize,
) -> Result<StoneImage> {
    let stone = StoneMap::new(a, cap)?;
    let k = stone.ultrafilters.len();

    let mut sets: BTreeSet<ElementSet> = stone.images.iter().cloned().collect();
    loop {
        let current: Vec<ElementSet> = sets.iter().cloned().collect();
        let mut grew = false;
        for p in &current {
            grew |= sets.insert(p.complement());
            for q in &current {
                grew |= sets.insert(p.union(q));
                grew |= sets.insert(p.intersection(q));
            }
        }
        if sets.len() > cap {
            return Err(Error::TooLarge {
                what: "Stone image size",
                requested: sets.len() as u128,
                cap: cap as u128,
            });
        }
        if !grew {
            break;
        }
    }

    let elements: Vec<ElementSet> = sets.into_iter().collect();
    let index: HashMap<&ElementSet, usize> =
        elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let at = |s: ElementSet| index[&s];
    let names = elements
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|i| format!("p{i}")).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let join = elements
        .iter()
        .map(|p| elements.iter().map(|q| at(p.union(q))).collect())
        .collect();
    let meet = elements
        .iter()
        .map(|p| elements.iter().map(|q| at(p.intersection(q))).collect())
        .collect();
    let complement = elements.iter().map(|p| at(p.complement())).collect();
    let image_algebra = FiniteAlgebra::from_tables(
        names,
        join,
        meet,
        complement,
        at(ElementSet::empty(k)),
        at(ElementSet::full(k)),
    )?;

    let embedding: Vec<ElementId> = stone
        .images
        .iter()
        .map(|s| ElementId(index[s]))
        .collect();
    let iso = is_isomorphism(&embedding, a, &image_algebra)?;
    let onto_full_power_set =
        iso && k < usize::BITS as usize && image_algebra.size() == 1usize << k;
    Ok(StoneImage {
        ultrafilters: stone.ultrafilters,
        map: stone.images,
        image_algebra,
        embedding,
        is_isomorphism: iso,
        onto_full_power_set,
    })
}
