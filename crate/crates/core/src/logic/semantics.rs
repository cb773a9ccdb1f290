use std::fmt;
use std::sync::Arc;

use super::parser::parse_in;
use super::Formula;
use crate::error::{Error, Result};

/// Default ceiling on the number of variables in a universe.
pub const DEFAULT_VAR_CAP: usize = 20;

/// An ordered, finite set of variable names.
///
/// Assignments over a universe are numbered in binary with the first
/// variable most significant, so index 0 makes everything false and
/// `2^n - 1` makes everything true.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe(Arc<[String]>);

impl Universe {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::with_cap(names, DEFAULT_VAR_CAP)
    }

    pub fn with_cap<S: Into<String>>(names: impl IntoIterator<Item = S>, cap: usize) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > cap {
            return Err(Error::TooLarge {
                what: "variable count",
                requested: names.len() as u128,
                cap: cap as u128,
            });
        }
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Argument(format!("{name:?} is not a variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::Argument(format!("variable {name} declared twice")));
            }
        }
        Ok(Universe(names.into()))
    }

    /// The sorted variables of `formulas`.
    pub fn inferred<'a>(formulas: impl IntoIterator<Item = &'a Formula>, cap: usize) -> Result<Self> {
        let mut names = std::collections::BTreeSet::new();
        for f in formulas {
            names.extend(f.variables());
        }
        Self::with_cap(names, cap)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Number of assignments, `2^n`.
    pub fn assignment_count(&self) -> usize {
        1 << self.len()
    }

    pub fn assignments(&self) -> impl Iterator<Item = Assignment> + '_ {
        (0..self.assignment_count()).map(|i| Assignment::from_index(self, i))
    }

    pub fn covers(&self, f: &Formula) -> Result<()> {
        match f.variables().into_iter().find(|v| self.position(v).is_none()) {
            Some(v) => Err(Error::Argument(format!(
                "variable {v} is not in the universe [{}]",
                self.0.join(" ")
            ))),
            None => Ok(()),
        }
    }

    /// Truth value of `f` under the assignment with canonical index `index`.
    pub(crate) fn eval_index(&self, f: &Formula, index: usize) -> Result<bool> {
        let n = self.len();
        eval_with(f, &|name| self.position(name).map(|p| index >> (n - 1 - p) & 1 == 1))
    }
}

fn eval_with(f: &Formula, lookup: &dyn Fn(&str) -> Option<bool>) -> Result<bool> {
    Ok(match f {
        Formula::Var(v) => {
            lookup(v).ok_or_else(|| Error::Argument(format!("assignment has no value for {v}")))?
        }
        Formula::Not(g) => !eval_with(g, lookup)?,
        Formula::And(l, r) => eval_with(l, lookup)? & eval_with(r, lookup)?,
        Formula::Or(l, r) => eval_with(l, lookup)? | eval_with(r, lookup)?,
        Formula::Implies(l, r) => !eval_with(l, lookup)? | eval_with(r, lookup)?,
        Formula::Iff(l, r) => eval_with(l, lookup)? == eval_with(r, lookup)?,
    })
}

/// A total map from a universe's variables to truth values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    universe: Universe,
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(universe: &Universe, values: Vec<bool>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::Argument(format!(
                "assignment gives {} values for {} variables",
                values.len(),
                universe.len()
            )));
        }
        Ok(Assignment {
            universe: universe.clone(),
            values,
        })
    }

    pub fn from_index(universe: &Universe, index: usize) -> Self {
        let n = universe.len();
        assert!(index < 1 << n, "assignment index {index} out of range");
        Assignment {
            universe: universe.clone(),
            values: (0..n).map(|p| index >> (n - 1 - p) & 1 == 1).collect(),
        }
    }

    /// Canonical index: binary with the first variable most significant.
    pub fn index(&self) -> usize {
        self.values.iter().fold(0, |acc, &b| acc << 1 | b as usize)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.universe.position(name).map(|p| self.values[p])
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .universe
            .names()
            .iter()
            .zip(&self.values)
            .map(|(n, &b)| format!("{n}={}", b as u8))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Truth value of `f` under `h`. Variables `h` does not cover are an error.
pub fn evaluate(f: &Formula, h: &Assignment) -> Result<bool> {
    eval_with(f, &|name| h.get(name))
}

/// One row per assignment of `universe`, in canonical order.
pub fn truth_table(f: &Formula, universe: &Universe) -> Result<Vec<(Assignment, bool)>> {
    universe.covers(f)?;
    universe
        .assignments()
        .map(|h| {
            let value = evaluate(f, &h)?;
            Ok((h, value))
        })
        .collect()
}

pub fn is_tautology(f: &Formula, universe: &Universe) -> Result<bool> {
    universe.covers(f)?;
    for i in 0..universe.assignment_count() {
        if !universe.eval_index(f, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite theory over an explicit universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    universe: Universe,
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(universe: Universe, formulas: Vec<Formula>) -> Result<Self> {
        for f in &formulas {
            universe.covers(f)?;
        }
        Ok(Theory { universe, formulas })
    }

    pub fn empty(universe: Universe) -> Self {
        Theory {
            universe,
            formulas: Vec::new(),
        }
    }

    /// Parses each string as a formula; the universe is the sorted set of
    /// variables that occur.
    pub fn from_strs(formulas: &[&str]) -> Result<Self> {
        let parsed = formulas
            .iter()
            .map(|s| super::parse(s).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        let universe = Universe::inferred(&parsed, DEFAULT_VAR_CAP)?;
        Ok(Theory {
            universe,
            formulas: parsed,
        })
    }

    /// Reads the theory file format: one formula per line, `#` comment lines,
    /// and an optional leading `vars: P Q R` header fixing the universe and
    /// its order. Without a header the universe is the sorted set of
    /// occurring variables.
    pub fn parse_file(text: &str, var_cap: usize) -> Result<Self> {
        let mut declared: Option<Universe> = None;
        let mut lines: Vec<(usize, &str)> = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(vars) = line.strip_prefix("vars:") {
                if declared.is_some() || !lines.is_empty() {
                    return Err(Error::Argument(format!(
                        "line {}: the vars header must come before any formula",
                        number + 1
                    )));
                }
                declared = Some(Universe::with_cap(vars.split_whitespace(), var_cap)?);
                continue;
            }
            lines.push((number + 1, line));
        }
        let parse_line = |(number, line): &(usize, &str), universe: Option<&Universe>| {
            let parsed = match universe {
                Some(u) => parse_in(line, u),
                None => super::parse(line),
            };
            parsed.map_err(|e| Error::Argument(format!("line {number}: {e}")))
        };
        let formulas = lines
            .iter()
            .map(|l| parse_line(l, declared.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let universe = match declared {
            Some(u) => u,
            None => Universe::inferred(&formulas, var_cap)?,
        };
        Theory::new(universe, formulas)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    /// The same theory with `f` appended.
    pub fn with(&self, f: Formula) -> Result<Self> {
        self.universe.covers(&f)?;
        let mut formulas = self.formulas.clone();
        formulas.push(f);
        Ok(Theory {
            universe: self.universe.clone(),
            formulas,
        })
    }

    pub(crate) fn holds_at(&self, index: usize) -> Result<bool> {
        for f in &self.formulas {
            if !self.universe.eval_index(f, index)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.formulas.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Canonical indices of the assignments satisfying every formula of `t`.
pub fn models(t: &Theory) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..t.universe.assignment_count() {
        if t.holds_at(i)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// `f ↔ g` holds in every model of `t`.
pub fn semantically_equivalent(f: &Formula, g: &Formula, t: &Theory) -> Result<bool> {
    t.universe.covers(f)?;
    t.universe.covers(g)?;
    for i in 0..t.universe.assignment_count() {
        if t.holds_at(i)? && t.universe.eval_index(f, i)? != t.universe.eval_index(g, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f` holds in every model of `t`.
pub fn entails(t: &Theory, f: &Formula) -> Result<bool> {
    t.universe.covers(f)?;
    for i in 0..t.universe.assignment_count() {
        if t.holds_at(i)? && !t.universe.eval_index(f, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force satisfiability: the first model of `t` in canonical order.
pub fn sat_oracle(t: &Theory) -> Result<Option<Assignment>> {
    for i in 0..t.universe.assignment_count() {
        if t.holds_at(i)? {
            return Ok(Some(Assignment::from_index(&t.universe, i)));
        }
    }
    Ok(None)
}
