//! Finite Boolean algebras and the machinery around them: filters and
//! ultrafilters, the Stone representation, Lindenbaum-Tarski algebras of
//! propositional theories, and model extraction through ultrafilters. Every
//! claim is checked exhaustively on finite carriers.

pub mod algebra;
pub mod bitset;
pub mod completeness;
pub mod corpus;
pub mod error;
pub mod filters;
pub mod lindenbaum;
pub mod logic;
pub mod render;
pub mod stone;

pub use algebra::{BooleanAlgebra, ElementId, FiniteAlgebra, PowerSetAlgebra};
pub use bitset::ElementSet;
pub use error::{Error, Result};
