//! Propositional formulas over a finite, ordered set of variables.

mod formula;
mod parser;
mod semantics;

pub use formula::Formula;
pub use parser::{parse, parse_in, tokenize, ParseError, Token, TokenKind};
pub use semantics::{
    entails, evaluate, is_tautology, models, sat_oracle, semantically_equivalent, truth_table,
    Assignment, Theory, Universe, DEFAULT_VAR_CAP,
};
