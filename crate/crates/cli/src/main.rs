use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stonework::algebra::{load_algebra, verify_axioms_with_cap, LoadedAlgebra, DEFAULT_CARRIER_CAP};
use stonework::completeness::check_theory;
use stonework::corpus::{run_corpus, CorpusConfig, DEFAULT_SEED};
use stonework::filters::enumerate_ultrafilters_with_cap;
use stonework::lindenbaum::build_lt_algebra_with_cap;
use stonework::logic::{parse, parse_in, truth_table, Theory, Universe, DEFAULT_VAR_CAP};
use stonework::render::{self, Format};
use stonework::stone::verify_stone_embedding_with_cap;
use stonework::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "stonework", version, about = "Finite Boolean algebras, ultrafilters and propositional models")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Largest carrier to materialize, check or enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CARRIER_CAP, value_parser = positive)]
    carrier_cap: usize,

    /// Largest variable universe.
    #[arg(long, global = true, default_value_t = DEFAULT_VAR_CAP, value_parser = positive)]
    var_cap: usize,

    /// Seed for randomized corpora.
    #[arg(long, global = true, env = "STONEWORK_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check B1-B5 on an algebra file; exits 1 if any axiom fails.
    CheckAxioms { algebra: PathBuf },
    /// List the ultrafilters of an algebra file.
    Ultrafilters { algebra: PathBuf },
    /// Verify the Stone map of an algebra file is an embedding.
    Stone { algebra: PathBuf },
    /// Summarize the Lindenbaum-Tarski algebra of a theory file.
    Lt { theory: PathBuf },
    /// Find a model of a theory file through an ultrafilter.
    FindModel { theory: PathBuf },
    /// Print the truth table of a formula.
    TruthTable {
        formula: String,
        /// Variables in table order, comma or space separated.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Run the completeness cross-check corpus.
    Corpus {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long, default_value_t = 500)]
        random: usize,
        /// Include the verdict of every exhaustive theory.
        #[arg(long)]
        full: bool,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<LoadedAlgebra, Error> {
    load_algebra(&read(path)?)
}

/// Output and whether the command's own checks passed.
fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let format = Format::from(cli.format);
    let cap = cli.carrier_cap;
    match &cli.command {
        Command::CheckAxioms { algebra } => {
            let a = load(algebra)?;
            let report = verify_axioms_with_cap(&a, cap)?;
            Ok((render::axioms(&a, &report, format), report.all_pass()))
        }
        Command::Ultrafilters { algebra } => {
            let a = load(algebra)?;
            let list = enumerate_ultrafilters_with_cap(&a, cap)?;
            Ok((render::ultrafilters(&a, &list, format), true))
        }
        Command::Stone { algebra } => {
            let a = load(algebra)?;
            let report = verify_stone_embedding_with_cap(&a, cap)?;
            Ok((render::stone(&a, &report, format), report.is_embedding()))
        }
        Command::Lt { theory } => {
            let t = Theory::parse_file(&read(theory)?, cli.var_cap)?;
            let lt = build_lt_algebra_with_cap(&t, cap)?;
            Ok((render::lindenbaum(&lt, format), true))
        }
        Command::FindModel { theory } => {
            let t = Theory::parse_file(&read(theory)?, cli.var_cap)?;
            let free = build_lt_algebra_with_cap(&Theory::empty(t.universe().clone()), cap)?;
            let verdict = check_theory(&free, &t)?;
            let ok = verdict.ok();
            Ok((render::verdict(&verdict, format), ok))
        }
        Command::TruthTable { formula, vars } => {
            let (f, universe) = match vars {
                Some(list) => {
                    let names = list.split([',', ' ']).filter(|s| !s.is_empty());
                    let universe = Universe::with_cap(names, cli.var_cap)?;
                    (parse_in(formula, &universe)?, universe)
                }
                None => {
                    let f = parse(formula)?;
                    let universe = Universe::inferred([&f], cli.var_cap)?;
                    (f, universe)
                }
            };
            let rows = truth_table(&f, &universe)?;
            Ok((render::truth_table(&rows, &f, format), true))
        }
        Command::Corpus {
            depth,
            max_size,
            random,
            full,
        } => {
            let config = CorpusConfig {
                seed: cli.seed,
                exhaustive_depth: *depth,
                max_theory_size: *max_size,
                random_count: *random,
                keep_exhaustive_verdicts: *full,
                ..CorpusConfig::default()
            };
            let report = run_corpus(&config)?;
            Ok((render::corpus(&report, format), report.clean()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_size_refusal() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
