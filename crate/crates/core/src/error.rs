use thiserror::Error;

use crate::graded::GradedChar;

/// Everything that can go wrong inside the toolkit.
///
/// The variants fall into three families that the command-line front end
/// maps onto exit codes: bad input ([`Error::is_input_error`]), a
/// mathematical inconsistency in otherwise well-formed data, and a failure
/// of the rank-one matrix oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the configured cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("character table computation failed: {0}")]
    CharacterTable(String),

    #[error("fusion coefficient failure: {0}")]
    Fusion(String),

    #[error("unknown weight {0:?}")]
    UnknownWeight(String),

    /// Input data violates a named invariant.
    #[error("validation failed [{invariant}]: {detail}")]
    Validation { invariant: &'static str, detail: String },

    /// A character is not a nonnegative combination of simple characters.
    #[error("not in the nonnegative span of the simple characters: {detail}; residual = {residual}")]
    NotInSpan { detail: String, residual: Box<GradedChar> },

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("oracle verification failed: {0}")]
    Oracle(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn validation(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Validation { invariant, detail: detail.into() }
    }

    /// Malformed or invalid input files and arguments.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidPermutation(_)
                | Error::GroupTooLarge { .. }
                | Error::NotInGroup(_)
                | Error::UnknownWeight(_)
                | Error::Validation { .. }
                | Error::Io { .. }
                | Error::Json { .. }
        )
    }

    pub fn is_oracle_error(&self) -> bool {
        matches!(self, Error::Oracle(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
