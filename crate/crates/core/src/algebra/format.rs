//! JSON documents describing algebras.
//!
//! ```json
//! {"type":"powerset","ground":["a","b","c"]}
//! {"type":"table","elements":["0","1"],"zero":"0","one":"1",
//!  "join":[["0","1"],["1","1"]],"meet":[["0","0"],["0","1"]],"not":["1","0"]}
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{BooleanAlgebra, ElementId, FiniteAlgebra, PowerSetAlgebra};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraDocument {
    Powerset {
        ground: Vec<String>,
    },
    Table {
        elements: Vec<String>,
        zero: String,
        one: String,
        join: Vec<Vec<String>>,
        meet: Vec<Vec<String>>,
        not: Vec<String>,
    },
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    /// Table document for any algebra, using its element names.
    pub fn table_of<A: BooleanAlgebra + ?Sized>(a: &A) -> Self {
        let name = |x: ElementId| a.element_name(x);
        AlgebraDocument::Table {
            elements: a.elements().map(name).collect(),
            zero: name(a.zero()),
            one: name(a.one()),
            join: a
                .elements()
                .map(|x| a.elements().map(|y| name(a.join(x, y))).collect())
                .collect(),
            meet: a
                .elements()
                .map(|x| a.elements().map(|y| name(a.meet(x, y))).collect())
                .collect(),
            not: a.elements().map(|x| name(a.complement(x))).collect(),
        }
    }

    /// Validates totality and closure, then builds the algebra.
    pub fn into_algebra(self) -> Result<LoadedAlgebra> {
        match self {
            AlgebraDocument::Powerset { ground } => {
                Ok(LoadedAlgebra::PowerSet(PowerSetAlgebra::new(ground)?))
            }
            AlgebraDocument::Table {
                elements,
                zero,
                one,
                join,
                meet,
                not,
            } => {
                let index: HashMap<&str, usize> = elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (e.as_str(), i))
                    .collect();
                if index.len() != elements.len() {
                    return Err(Error::Structure("element names are not distinct".into()));
                }
                let resolve = |name: &str, field: &str| -> Result<usize> {
                    index.get(name).copied().ok_or_else(|| {
                        Error::Structure(format!(
                            "{field} refers to {name:?}, which is not an element"
                        ))
                    })
                };
                let table = |rows: &[Vec<String>], field: &str| -> Result<Vec<Vec<usize>>> {
                    rows.iter()
                        .map(|row| row.iter().map(|e| resolve(e, field)).collect())
                        .collect()
                };
                let join = table(&join, "join")?;
                let meet = table(&meet, "meet")?;
                let not = not
                    .iter()
                    .map(|e| resolve(e, "not"))
                    .collect::<Result<Vec<_>>>()?;
                let zero = resolve(&zero, "zero")?;
                let one = resolve(&one, "one")?;
                let algebra = FiniteAlgebra::from_tables(elements, join, meet, not, zero, one)?;
                Ok(LoadedAlgebra::Table(algebra))
            }
        }
    }
}

/// Parses and validates an algebra document.
pub fn load_algebra(text: &str) -> Result<LoadedAlgebra> {
    AlgebraDocument::parse(text)?.into_algebra()
}

/// Either form an algebra document can describe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedAlgebra {
    PowerSet(PowerSetAlgebra),
    Table(FiniteAlgebra),
}

impl BooleanAlgebra for LoadedAlgebra {
    fn size(&self) -> usize {
        match self {
            LoadedAlgebra::PowerSet(a) => a.size(),
            LoadedAlgebra::Table(a) => a.size(),
        }
    }

    fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        match self {
            LoadedAlgebra::PowerSet(a) => a.join(x, y),
            LoadedAlgebra::Table(a) => a.join(x, y),
        }
    }

    fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        match self {
            LoadedAlgebra::PowerSet(a) => a.meet(x, y),
            LoadedAlgebra::Table(a) => a.meet(x, y),
        }
    }

    fn complement(&self, x: ElementId) -> ElementId {
        match self {
            LoadedAlgebra::PowerSet(a) => a.complement(x),
            LoadedAlgebra::Table(a) => a.complement(x),
        }
    }

    fn zero(&self) -> ElementId {
        match self {
            LoadedAlgebra::PowerSet(a) => a.zero(),
            LoadedAlgebra::Table(a) => a.zero(),
        }
    }

    fn one(&self) -> ElementId {
        match self {
            LoadedAlgebra::PowerSet(a) => a.one(),
            LoadedAlgebra::Table(a) => a.one(),
        }
    }

    fn element_name(&self, x: ElementId) -> String {
        match self {
            LoadedAlgebra::PowerSet(a) => a.element_name(x),
            LoadedAlgebra::Table(a) => a.element_name(x),
        }
    }

    fn find(&self, name: &str) -> Option<ElementId> {
        match self {
            LoadedAlgebra::PowerSet(a) => a.find(name),
            LoadedAlgebra::Table(a) => a.find(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_CARRIER_CAP;

    #[test]
    fn loads_powerset() {
        let a = load_algebra(r#"{"type":"powerset","ground":["a","b","c"]}"#).unwrap();
        assert_eq!(a.size(), 8);
        assert!(matches!(a, LoadedAlgebra::PowerSet(_)));
    }

    #[test]
    fn loads_table() {
        let text = r#"{"type":"table","elements":["bot","top"],"zero":"bot","one":"top",
            "join":[["bot","top"],["top","top"]],"meet":[["bot","bot"],["bot","top"]],
            "not":["top","bot"]}"#;
        let a = load_algebra(text).unwrap();
        let expected = FiniteAlgebra::from_tables(
            vec!["bot".into(), "top".into()],
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![0, 0], vec![0, 1]],
            vec![1, 0],
            0,
            1,
        )
        .unwrap();
        assert_eq!(a, LoadedAlgebra::Table(expected));
    }

    #[test]
    fn rejects_unknown_names_and_ragged_rows() {
        let unknown = r#"{"type":"table","elements":["0","1"],"zero":"0","one":"1",
            "join":[["0","1"],["1","2"]],"meet":[["0","0"],["0","1"]],"not":["1","0"]}"#;
        assert!(matches!(load_algebra(unknown), Err(Error::Structure(_))));
        let ragged = r#"{"type":"table","elements":["0","1"],"zero":"0","one":"1",
            "join":[["0","1"],["1"]],"meet":[["0","0"],["0","1"]],"not":["1","0"]}"#;
        assert!(matches!(load_algebra(ragged), Err(Error::Structure(_))));
        assert!(matches!(load_algebra("{\"type\":\"lattice\"}"), Err(Error::Document(_))));
    }

    #[test]
    fn materialized_power_set_round_trips_through_table_document() {
        let p = PowerSetAlgebra::new(["x", "y", "z"]).unwrap();
        let table = p.materialize(DEFAULT_CARRIER_CAP).unwrap();
        let text = AlgebraDocument::table_of(&table).to_json();
        assert_eq!(load_algebra(&text).unwrap(), LoadedAlgebra::Table(table));
    }
}
