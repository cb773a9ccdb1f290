//! Text and JSON renderings of reports, shared by the command-line tool.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::{AxiomReport, BooleanAlgebra, ElementId};
use crate::completeness::TheoryVerdict;
use crate::corpus::{CorpusReport, CorpusSummary};
use crate::filters::Ultrafilter;
use crate::lindenbaum::LtAlgebra;
use crate::logic::{Assignment, Formula};
use crate::stone::{EquationCheck, StoneReport};

/// Classes listed individually in LT summaries up to this carrier size.
const LT_LISTING_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn names<A: BooleanAlgebra + ?Sized>(a: &A, ids: impl IntoIterator<Item = ElementId>) -> Vec<String> {
    ids.into_iter().map(|x| a.element_name(x)).collect()
}

pub fn axioms<A: BooleanAlgebra + ?Sized>(a: &A, report: &AxiomReport, format: Format) -> String {
    match format {
        Format::Structured => {
            let outcomes: Vec<Value> = report
                .outcomes
                .iter()
                .map(|o| {
                    let witness = o.counterexample.as_ref().map(|c| {
                        json!({
                            "law": c.law,
                            "x": a.element_name(c.x),
                            "y": c.y.map(|y| a.element_name(y)),
                            "z": c.z.map(|z| a.element_name(z)),
                        })
                    });
                    json!({
                        "axiom": o.axiom.label(),
                        "name": o.axiom.name(),
                        "pass": o.passed(),
                        "counterexample": witness,
                    })
                })
                .collect();
            pretty(&json!({
                "carrier_size": report.carrier_size,
                "all_pass": report.all_pass(),
                "axioms": outcomes,
            }))
        }
        Format::Text => {
            let mut out = format!("carrier size: {}\n", report.carrier_size);
            for o in &report.outcomes {
                match &o.counterexample {
                    None => writeln!(out, "{}: pass", o.axiom).unwrap(),
                    Some(c) => {
                        let mut args = vec![format!("x={}", a.element_name(c.x))];
                        if let Some(y) = c.y {
                            args.push(format!("y={}", a.element_name(y)));
                        }
                        if let Some(z) = c.z {
                            args.push(format!("z={}", a.element_name(z)));
                        }
                        writeln!(out, "{}: FAIL {} at {}", o.axiom, c.law, args.join(" ")).unwrap()
                    }
                }
            }
            out
        }
    }
}

pub fn ultrafilters<A: BooleanAlgebra + ?Sized>(a: &A, list: &[Ultrafilter], format: Format) -> String {
    let generator = |u: &Ultrafilter| {
        u.iter()
            .fold(a.one(), |acc, x| a.meet(acc, x))
    };
    match format {
        Format::Structured => {
            let items: Vec<Value> = list
                .iter()
                .map(|u| {
                    json!({
                        "generator": a.element_name(generator(u)),
                        "members": names(a, u.iter()),
                    })
                })
                .collect();
            pretty(&json!({ "count": list.len(), "ultrafilters": items }))
        }
        Format::Text => {
            let mut out = format!("{} ultrafilters\n", list.len());
            for (i, u) in list.iter().enumerate() {
                writeln!(
                    out,
                    "p{i} = ↑{}: {}",
                    a.element_name(generator(u)),
                    names(a, u.iter()).join(" ")
                )
                .unwrap();
            }
            out
        }
    }
}

fn equation_json<A: BooleanAlgebra + ?Sized>(a: &A, e: &EquationCheck) -> Value {
    json!({
        "equation": e.equation,
        "holds": e.holds(),
        "witness": e.witness.as_ref().map(|w| names(a, w.iter().copied())),
    })
}

pub fn stone<A: BooleanAlgebra + ?Sized>(a: &A, r: &StoneReport, format: Format) -> String {
    let ult = |set: &[usize]| -> Vec<String> { set.iter().map(|i| format!("p{i}")).collect() };
    match format {
        Format::Structured => {
            let table: Vec<Value> = a
                .elements()
                .map(|x| json!({ "element": a.element_name(x), "ultrafilters": r.table[x.0] }))
                .collect();
            let separations: Vec<Value> = r
                .separations
                .iter()
                .map(|s| {
                    json!({
                        "inside": a.element_name(s.inside),
                        "outside": a.element_name(s.outside),
                        "ultrafilter": s.ultrafilter,
                    })
                })
                .collect();
            pretty(&json!({
                "carrier_size": r.carrier_size,
                "ultrafilter_count": r.ultrafilter_count,
                "zero_to_empty": r.zero_to_empty,
                "one_to_all": r.one_to_all,
                "equations": [equation_json(a, &r.join), equation_json(a, &r.meet), equation_json(a, &r.complement)],
                "injective": r.injective(),
                "collision": r.collision.map(|(x, y)| names(a, [x, y])),
                "separated": r.separated(),
                "unseparated": r.unseparated.map(|(x, y)| names(a, [x, y])),
                "routes_agree": r.routes_agree(),
                "embedding": r.is_embedding(),
                "finite_strengthening": r.finite_strengthening,
                "separations": separations,
                "table": table,
            }))
        }
        Format::Text => {
            let verdict = |b: bool| if b { "pass" } else { "FAIL" };
            let mut out = String::new();
            writeln!(out, "carrier size: {}", r.carrier_size).unwrap();
            writeln!(out, "|Ult A| = {}", r.ultrafilter_count).unwrap();
            writeln!(out, "s(0)=∅: {}", verdict(r.zero_to_empty)).unwrap();
            writeln!(out, "s(1)=Ult A: {}", verdict(r.one_to_all)).unwrap();
            for e in [&r.join, &r.meet, &r.complement] {
                write!(out, "{}: {}", e.equation, verdict(e.holds())).unwrap();
                if let Some(w) = &e.witness {
                    write!(out, " at {}", names(a, w.iter().copied()).join(" ")).unwrap();
                }
                out.push('\n');
            }
            writeln!(out, "injective: {}", verdict(r.injective())).unwrap();
            writeln!(
                out,
                "separating ultrafilters: {} of {} pairs",
                r.separations.len(),
                r.carrier_size * r.carrier_size.saturating_sub(1) / 2
            )
            .unwrap();
            writeln!(out, "routes agree: {}", verdict(r.routes_agree())).unwrap();
            writeln!(
                out,
                "embedding verified: {}",
                if r.is_embedding() { "yes" } else { "NO" }
            )
            .unwrap();
            writeln!(
                out,
                "finite strengthening |A| = 2^|Ult A|: {}",
                verdict(r.finite_strengthening)
            )
            .unwrap();
            for x in a.elements() {
                writeln!(out, "  s({}) = {{{}}}", a.element_name(x), ult(&r.table[x.0]).join(",")).unwrap();
            }
            out
        }
    }
}

fn model_names(lt: &LtAlgebra, c: ElementId) -> Vec<String> {
    lt.model_set(c)
        .into_iter()
        .map(|i| Assignment::from_index(lt.universe(), i).to_string())
        .collect()
}

pub fn lindenbaum(lt: &LtAlgebra, format: Format) -> String {
    let listed = lt.size() <= LT_LISTING_LIMIT && !lt.universe().is_empty();
    let representative = |c: ElementId| -> String {
        lt.representative_formula(c)
            .map(|f: Formula| f.to_string())
            .unwrap_or_default()
    };
    let models: Vec<String> = lt.model_assignments().map(|h| h.to_string()).collect();
    match format {
        Format::Structured => {
            let classes: Option<Vec<Value>> = listed.then(|| {
                lt.elements()
                    .map(|c| {
                        json!({
                            "element": lt.element_name(c),
                            "models": model_names(lt, c),
                            "representative": representative(c),
                        })
                    })
                    .collect()
            });
            pretty(&json!({
                "variables": lt.universe().names(),
                "theory": lt.theory().formulas().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "models": models,
                "carrier_size": lt.size(),
                "consistent": lt.consistency(),
                "classes": classes,
            }))
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "variables: {}", lt.universe().names().join(" ")).unwrap();
            writeln!(out, "theory: {}", lt.theory()).unwrap();
            writeln!(out, "models: {}", models.len()).unwrap();
            for m in &models {
                writeln!(out, "  {m}").unwrap();
            }
            writeln!(out, "carrier size: {}", lt.size()).unwrap();
            writeln!(out, "consistent: {}", if lt.consistency() { "yes" } else { "no" }).unwrap();
            if listed {
                for c in lt.elements() {
                    writeln!(out, "  {} = [{}]", lt.element_name(c), representative(c)).unwrap();
                }
            }
            out
        }
    }
}

pub fn verdict(v: &TheoryVerdict, format: Format) -> String {
    match format {
        Format::Structured => pretty(&serde_json::to_value(v).expect("verdicts serialize")),
        Format::Text => {
            let mut out = String::new();
            match &v.model {
                Some(m) => writeln!(out, "model: {m}").unwrap(),
                None => writeln!(out, "inconsistent").unwrap(),
            }
            if let Some(c) = v.diagram_commutes {
                writeln!(out, "diagram commutes: {}", if c { "yes" } else { "NO" }).unwrap();
            }
            writeln!(
                out,
                "agrees with brute-force search: {}",
                if v.oracle_agrees { "yes" } else { "NO" }
            )
            .unwrap();
            out
        }
    }
}

pub fn truth_table(rows: &[(Assignment, bool)], formula: &Formula, format: Format) -> String {
    match format {
        Format::Structured => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(h, b)| {
                    let values: serde_json::Map<String, Value> = h
                        .universe()
                        .names()
                        .iter()
                        .zip(h.values())
                        .map(|(n, &v)| (n.clone(), Value::Bool(v)))
                        .collect();
                    json!({ "assignment": values, "value": b })
                })
                .collect();
            pretty(&json!({ "formula": formula.to_string(), "rows": rows }))
        }
        Format::Text => {
            let mut out = String::new();
            for (h, b) in rows {
                let lhs = if h.universe().is_empty() {
                    "(empty)".to_string()
                } else {
                    h.to_string()
                };
                writeln!(out, "{lhs} | {}", *b as u8).unwrap();
            }
            out
        }
    }
}

fn summary_line(label: &str, s: &CorpusSummary) -> String {
    format!(
        "{label}: {} theories ({} consistent, {} inconsistent); disagreements {}, invalid models {}, diagram failures {}\n",
        s.theories, s.consistent, s.inconsistent, s.oracle_disagreements, s.invalid_models, s.diagram_failures
    )
}

pub fn corpus(r: &CorpusReport, format: Format) -> String {
    match format {
        Format::Structured => pretty(&serde_json::to_value(r).expect("reports serialize")),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "seed: {}", r.config.seed).unwrap();
            writeln!(
                out,
                "semantic classes at depth ≤ {}: {}",
                r.config.exhaustive_depth, r.class_count
            )
            .unwrap();
            out.push_str(&summary_line("exhaustive", &r.exhaustive));
            out.push_str(&summary_line("random", &r.random));
            for f in &r.failures {
                writeln!(out, "failure: {{{}}}", f.theory.join(", ")).unwrap();
            }
            writeln!(out, "{}", if r.clean() { "all checks passed" } else { "CHECKS FAILED" }).unwrap();
            out
        }
    }
}
