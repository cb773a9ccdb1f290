//! Models from ultrafilters.
//!
//! An assignment `h: V → 2` is the same thing as a homomorphism
//! `B_L(∅) → 2`, and `h` satisfies `T` exactly when it factors through the
//! projection `π: B_L(∅) → B_L(T)`. When `B_L(T)` is nontrivial it has an
//! ultrafilter `p`, its characteristic map `χ_p` is a homomorphism into 2,
//! and `χ_p ∘ π` is then a model of `T`.

use serde::Serialize;

use crate::algebra::{check_homomorphism, BooleanAlgebra, ElementId};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::filters::{extend_to_ultrafilter, is_ultrafilter, principal_filter, Ultrafilter};
use crate::lindenbaum::{build_lt_algebra, build_lt_algebra_with_cap, projection, LtAlgebra};
use crate::logic::{evaluate, sat_oracle, Assignment, Formula, Theory};

pub use crate::algebra::TwoElementAlgebra;

/// `χ_U`: 1 on members of `U`, 0 elsewhere.
pub fn characteristic_hom<A: BooleanAlgebra + ?Sized>(
    a: &A,
    members: &ElementSet,
) -> Result<Vec<ElementId>> {
    if !is_ultrafilter(a, members)? {
        return Err(Error::Precondition(
            "characteristic homomorphisms need an ultrafilter".into(),
        ));
    }
    Ok(a.elements()
        .map(|x| TwoElementAlgebra::from_bool(members.contains_id(x)))
        .collect())
}

fn require_free(lt_empty: &LtAlgebra) -> Result<()> {
    if lt_empty.models().len() != lt_empty.universe().assignment_count() {
        return Err(Error::Argument(
            "expected the algebra of the empty theory".into(),
        ));
    }
    Ok(())
}

/// The homomorphism `B_L(∅) → 2` induced by `h`: a class goes to 1 iff `h`
/// is one of its models.
pub fn assignment_to_hom(h: &Assignment, lt_empty: &LtAlgebra) -> Result<Vec<ElementId>> {
    require_free(lt_empty)?;
    if h.universe() != lt_empty.universe() {
        return Err(Error::Argument("assignment is over a different universe".into()));
    }
    let bit = h.index();
    Ok(lt_empty
        .elements()
        .map(|c| TwoElementAlgebra::from_bool(c.0 >> bit & 1 == 1))
        .collect())
}

/// Reads an assignment off a homomorphism `g: B_L(∅) → 2` via
/// `h(v) = g([v])`.
pub fn hom_to_assignment(g: &[ElementId], lt_empty: &LtAlgebra) -> Result<Assignment> {
    require_free(lt_empty)?;
    if !check_homomorphism(g, lt_empty, &TwoElementAlgebra)? {
        return Err(Error::Precondition(
            "map from B_L(∅) to 2 is not a homomorphism".into(),
        ));
    }
    let universe = lt_empty.universe();
    let values = universe
        .names()
        .iter()
        .map(|v| {
            let class = lt_empty.element_of(&Formula::var(v.clone()))?;
            Ok(g[class.0] == TwoElementAlgebra::TRUE)
        })
        .collect::<Result<Vec<_>>>()?;
    Assignment::new(universe, values)
}

/// The triangle `h = h̃ ∘ π` for one assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    pub h: Vec<ElementId>,
    pub pi: Vec<ElementId>,
    pub h_tilde: Option<Vec<ElementId>>,
    pub h_tilde_is_homomorphism: bool,
    pub commutes: bool,
    /// `B_L(T)` has at least two elements.
    pub target_nontrivial: bool,
}

/// Builds `h̃: B_L(T) → 2` from a model `h` of `T`, checks it is a
/// homomorphism and that the triangle commutes on all of `B_L(∅)`.
pub fn soundness_check_in(
    lt_empty: &LtAlgebra,
    lt_t: &LtAlgebra,
    h: &Assignment,
) -> Result<DiagramCheck> {
    let t = lt_t.theory();
    for f in t.formulas() {
        if !evaluate(f, h)? {
            return Err(Error::Precondition(format!("{h} does not satisfy {f}")));
        }
    }
    let pi = projection(lt_empty, lt_t)?;
    let h_hom = assignment_to_hom(h, lt_empty)?;
    let position = lt_t
        .models()
        .iter()
        .position(|&i| i == h.index())
        .ok_or_else(|| Error::Invariant(format!("{h} satisfies T but is not in Mod(T)")))?;
    let h_tilde: Vec<ElementId> = lt_t
        .elements()
        .map(|c| TwoElementAlgebra::from_bool(c.0 >> position & 1 == 1))
        .collect();
    let h_tilde_is_homomorphism = check_homomorphism(&h_tilde, lt_t, &TwoElementAlgebra)?;
    let commutes = lt_empty
        .elements()
        .all(|x| h_hom[x.0] == h_tilde[pi[x.0].0]);
    Ok(DiagramCheck {
        h: h_hom,
        pi,
        target_nontrivial: h_tilde_is_homomorphism && lt_t.size() >= 2,
        h_tilde: Some(h_tilde),
        h_tilde_is_homomorphism,
        commutes,
    })
}

/// [`soundness_check_in`] on freshly built algebras for `t`.
pub fn soundness_check(t: &Theory, h: &Assignment) -> Result<DiagramCheck> {
    let lt_empty = build_lt_algebra(&Theory::empty(t.universe().clone()))?;
    let lt_t = build_lt_algebra(t)?;
    soundness_check_in(&lt_empty, &lt_t, h)
}

/// Everything produced on the way from a consistent theory to its model.
#[derive(Clone, Debug)]
pub struct ModelExtraction {
    pub lt: LtAlgebra,
    pub ultrafilter: Ultrafilter,
    pub pi: Vec<ElementId>,
    /// `χ_p ∘ π` on `B_L(∅)`.
    pub h: Vec<ElementId>,
    pub model: Assignment,
}

/// Extends `{1}` to an ultrafilter `p` of `B_L(T)`, forms `χ_p ∘ π` and reads
/// the model off it. Returns `None` exactly when `B_L(T)` is trivial. The
/// model is checked against every formula of `T` before it is returned.
pub fn extract_model(lt_empty: &LtAlgebra, t: &Theory) -> Result<Option<ModelExtraction>> {
    // Mod(T) is a subset of all assignments, so B_L(T) is never larger than B_L(∅).
    let lt = build_lt_algebra_with_cap(t, lt_empty.size())?;
    extract_model_in(lt_empty, lt)
}

pub fn extract_model_in(lt_empty: &LtAlgebra, lt: LtAlgebra) -> Result<Option<ModelExtraction>> {
    if lt.is_trivial() {
        return Ok(None);
    }
    let unit = principal_filter(&lt, lt.one())?;
    let ultrafilter = extend_to_ultrafilter(&lt, &unit)?;
    let chi = characteristic_hom(&lt, ultrafilter.members())?;
    let pi = projection(lt_empty, &lt)?;
    let h: Vec<ElementId> = pi.iter().map(|c| chi[c.0]).collect();
    let model = hom_to_assignment(&h, lt_empty)?;
    for f in lt.theory().formulas() {
        if !evaluate(f, &model)? {
            return Err(Error::Invariant(format!(
                "ultrafilter model {model} falsifies {f}"
            )));
        }
    }
    Ok(Some(ModelExtraction {
        lt,
        ultrafilter,
        pi,
        h,
        model,
    }))
}

pub fn find_model_via_ultrafilter(t: &Theory) -> Result<Option<Assignment>> {
    let lt_empty = build_lt_algebra(&Theory::empty(t.universe().clone()))?;
    Ok(extract_model(&lt_empty, t)?.map(|e| e.model))
}

/// Per-theory outcome of running the ultrafilter route against the
/// brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryVerdict {
    pub theory: Vec<String>,
    pub consistent: bool,
    pub model: Option<String>,
    pub model_satisfies_theory: Option<bool>,
    pub diagram_commutes: Option<bool>,
    pub oracle_consistent: bool,
    pub oracle_agrees: bool,
}

impl TheoryVerdict {
    pub fn ok(&self) -> bool {
        self.oracle_agrees
            && self.model_satisfies_theory != Some(false)
            && self.diagram_commutes != Some(false)
    }
}

/// Runs the ultrafilter route on `t`, re-checks the model with `evaluate`,
/// checks the triangle through `B_L(T)` pointwise, and compares the
/// consistency verdict with [`sat_oracle`].
pub fn check_theory(lt_empty: &LtAlgebra, t: &Theory) -> Result<TheoryVerdict> {
    let oracle = sat_oracle(t)?;
    let extraction = extract_model(lt_empty, t)?;
    let mut verdict = TheoryVerdict {
        theory: t.formulas().iter().map(|f| f.to_string()).collect(),
        consistent: extraction.is_some(),
        model: None,
        model_satisfies_theory: None,
        diagram_commutes: None,
        oracle_consistent: oracle.is_some(),
        oracle_agrees: extraction.is_some() == oracle.is_some(),
    };
    if let Some(e) = extraction {
        let satisfies = t
            .formulas()
            .iter()
            .map(|f| evaluate(f, &e.model))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        let diagram = soundness_check_in(lt_empty, &e.lt, &e.model)?;
        let chi = characteristic_hom(&e.lt, e.ultrafilter.members())?;
        let commutes = diagram.commutes
            && diagram.h_tilde_is_homomorphism
            && diagram.h == e.h
            && diagram.h_tilde.as_deref() == Some(chi.as_slice());
        verdict.model = Some(e.model.to_string());
        verdict.model_satisfies_theory = Some(satisfies);
        verdict.diagram_commutes = Some(commutes);
    }
    Ok(verdict)
}
