use thiserror::Error;

use crate::logic::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation table or algebra document is not total or not closed over its carrier.
    #[error("malformed algebra: {0}")]
    Structure(String),

    #[error("element {index} is outside a carrier of {size} elements")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// A size cap refused the request.
    #[error("{what} of {requested} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// Raised when a self-check that the theory guarantees fails. Never expected.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid document: {0}")]
    Document(String),
}

impl Error {
    pub fn is_size_refusal(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Document(e.to_string())
    }
}
