//! Error type shared by all catalog evaluators.

use thiserror::Error;

/// Why a bound could not be evaluated.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    /// A stated hypothesis of the bound does not hold for the given
    /// parameters. The message names the failed clause; parameters are never
    /// silently clamped into range.
    #[error("hypothesis violated: {clause}")]
    Hypothesis { clause: String },

    /// The requested identifier is not in the catalog.
    #[error("unknown bound id {id:?}; known ids: {known}")]
    UnknownId { id: String, known: String },
}

impl BoundError {
    /// A [`BoundError::Hypothesis`] naming the failed clause. Public so
    /// that crates composing these bounds into larger ones can report their
    /// own hypothesis failures through the same type.
    pub fn hypothesis(clause: impl Into<String>) -> Self {
        BoundError::Hypothesis {
            clause: clause.into(),
        }
    }
}
