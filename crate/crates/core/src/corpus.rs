//! Theory corpora for cross-checking the ultrafilter route against the
//! brute-force oracle.
//!
//! The exhaustive part takes one formula per semantic class reachable at
//! bounded depth and forms every theory of up to `max_theory_size` of them.
//! The random part adds deeper formulas from a seeded generator.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::completeness::{check_theory, TheoryVerdict};
use crate::error::{Error, Result};
use crate::lindenbaum::build_lt_algebra;
use crate::logic::{Formula, Theory, Universe};

pub const DEFAULT_SEED: u64 = 20_260_117;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub variables: Vec<String>,
    pub seed: u64,
    pub exhaustive_depth: usize,
    pub max_theory_size: usize,
    pub random_count: usize,
    pub random_min_depth: usize,
    pub random_max_depth: usize,
    pub random_max_formulas: usize,
    /// Keep the verdict of every exhaustive theory, not only failures.
    pub keep_exhaustive_verdicts: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            variables: vec!["P".into(), "Q".into(), "R".into()],
            seed: DEFAULT_SEED,
            exhaustive_depth: 3,
            max_theory_size: 2,
            random_count: 500,
            random_min_depth: 4,
            random_max_depth: 6,
            random_max_formulas: 4,
            keep_exhaustive_verdicts: false,
        }
    }
}

/// Truth table of `f` as a mask: bit `i` is the value under assignment `i`.
fn table_mask(f: &Formula, universe: &Universe) -> Result<u64> {
    let mut mask = 0;
    for i in 0..universe.assignment_count() {
        if universe.eval_index(f, i)? {
            mask |= 1 << i;
        }
    }
    Ok(mask)
}

/// One formula for each semantic class expressible with depth at most
/// `max_depth` (a variable has depth 0). Each class keeps the first formula
/// found, level by level, so representatives have minimal depth.
pub fn class_representatives(universe: &Universe, max_depth: usize) -> Result<Vec<Formula>> {
    if universe.len() > 6 {
        return Err(Error::TooLarge {
            what: "corpus variable count",
            requested: universe.len() as u128,
            cap: 6,
        });
    }
    let full = if universe.assignment_count() == 64 {
        u64::MAX
    } else {
        (1u64 << universe.assignment_count()) - 1
    };
    let mut reps: Vec<(Formula, u64)> = Vec::new();
    let mut seen: HashMap<u64, usize> = HashMap::new();
    for name in universe.names() {
        let f = Formula::var(name.clone());
        let m = table_mask(&f, universe)?;
        if seen.insert(m, reps.len()).is_none() {
            reps.push((f, m));
        }
    }
    for _ in 0..max_depth {
        let prev = reps.clone();
        let mut add = |f: Formula, m: u64| {
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(m) {
                e.insert(reps.len());
                reps.push((f, m));
            }
        };
        for (f, m) in &prev {
            add(Formula::not(f.clone()), !m & full);
        }
        for (f, mf) in &prev {
            for (g, mg) in &prev {
                add(Formula::and(f.clone(), g.clone()), mf & mg);
                add(Formula::or(f.clone(), g.clone()), mf | mg);
                add(Formula::implies(f.clone(), g.clone()), (!mf | mg) & full);
                add(Formula::iff(f.clone(), g.clone()), !(mf ^ mg) & full);
            }
        }
    }
    for (f, m) in &reps {
        if table_mask(f, universe)? != *m {
            return Err(Error::Invariant(format!("truth table of {f} miscomputed")));
        }
    }
    Ok(reps.into_iter().map(|(f, _)| f).collect())
}

/// Every theory of at most `max_size` distinct representatives, starting
/// with the empty theory.
pub fn exhaustive_theories(universe: &Universe, reps: &[Formula], max_size: usize) -> Vec<Theory> {
    fn extend(
        universe: &Universe,
        reps: &[Formula],
        start: usize,
        current: &mut Vec<Formula>,
        left: usize,
        out: &mut Vec<Theory>,
    ) {
        out.push(Theory::new(universe.clone(), current.clone()).expect("representatives use the universe"));
        if left == 0 {
            return;
        }
        for i in start..reps.len() {
            current.push(reps[i].clone());
            extend(universe, reps, i + 1, current, left - 1, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(universe, reps, 0, &mut Vec::new(), max_size, &mut out);
    out
}

/// A random formula of exactly `depth`.
pub fn random_formula(rng: &mut impl Rng, universe: &Universe, depth: usize) -> Formula {
    let names = universe.names();
    if depth == 0 {
        return Formula::var(names[rng.gen_range(0..names.len())].clone());
    }
    let op = rng.gen_range(0..5);
    if op == 0 {
        return Formula::not(random_formula(rng, universe, depth - 1));
    }
    let deep = random_formula(rng, universe, depth - 1);
    let other_depth = rng.gen_range(0..depth);
    let shallow = random_formula(rng, universe, other_depth);
    let (l, r) = if rng.gen_bool(0.5) {
        (deep, shallow)
    } else {
        (shallow, deep)
    };
    match op {
        1 => Formula::and(l, r),
        2 => Formula::or(l, r),
        3 => Formula::implies(l, r),
        _ => Formula::iff(l, r),
    }
}

pub fn random_theories(config: &CorpusConfig, universe: &Universe) -> Vec<Theory> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.random_count)
        .map(|_| {
            let size = rng.gen_range(1..=config.random_max_formulas.max(1));
            let formulas = (0..size)
                .map(|_| {
                    let depth = rng.gen_range(config.random_min_depth..=config.random_max_depth);
                    random_formula(&mut rng, universe, depth)
                })
                .collect();
            Theory::new(universe.clone(), formulas).expect("generated over the universe")
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub theories: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub oracle_disagreements: usize,
    pub invalid_models: usize,
    pub diagram_failures: usize,
}

impl CorpusSummary {
    fn record(&mut self, v: &TheoryVerdict) {
        self.theories += 1;
        if v.consistent {
            self.consistent += 1;
        } else {
            self.inconsistent += 1;
        }
        self.oracle_disagreements += usize::from(!v.oracle_agrees);
        self.invalid_models += usize::from(v.model_satisfies_theory == Some(false));
        self.diagram_failures += usize::from(v.diagram_commutes == Some(false));
    }

    pub fn clean(&self) -> bool {
        self.oracle_disagreements == 0 && self.invalid_models == 0 && self.diagram_failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub config: CorpusConfig,
    pub class_count: usize,
    pub exhaustive: CorpusSummary,
    pub random: CorpusSummary,
    /// Verdicts that failed any check.
    pub failures: Vec<TheoryVerdict>,
    pub exhaustive_verdicts: Vec<TheoryVerdict>,
    pub random_verdicts: Vec<TheoryVerdict>,
}

impl CorpusReport {
    pub fn clean(&self) -> bool {
        self.exhaustive.clean() && self.random.clean()
    }
}

pub fn run_corpus(config: &CorpusConfig) -> Result<CorpusReport> {
    let universe = Universe::new(config.variables.iter().cloned())?;
    if universe.is_empty() {
        return Err(Error::Argument("the corpus needs at least one variable".into()));
    }
    if config.random_min_depth > config.random_max_depth {
        return Err(Error::Argument("random depth range is empty".into()));
    }
    let lt_empty = build_lt_algebra(&Theory::empty(universe.clone()))?;
    let reps = class_representatives(&universe, config.exhaustive_depth)?;

    let mut report = CorpusReport {
        config: config.clone(),
        class_count: reps.len(),
        exhaustive: CorpusSummary::default(),
        random: CorpusSummary::default(),
        failures: Vec::new(),
        exhaustive_verdicts: Vec::new(),
        random_verdicts: Vec::new(),
    };
    for t in exhaustive_theories(&universe, &reps, config.max_theory_size) {
        let v = check_theory(&lt_empty, &t)?;
        report.exhaustive.record(&v);
        if !v.ok() {
            report.failures.push(v.clone());
        }
        if config.keep_exhaustive_verdicts {
            report.exhaustive_verdicts.push(v);
        }
    }
    for t in random_theories(config, &universe) {
        let v = check_theory(&lt_empty, &t)?;
        report.random.record(&v);
        if !v.ok() {
            report.failures.push(v.clone());
        }
        report.random_verdicts.push(v);
    }
    Ok(report)
}
