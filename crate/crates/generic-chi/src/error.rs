use polytope_mv::MvError;
use thiserror::Error;

/// Errors from system construction and characteristic evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiError {
    /// A stated hypothesis of the formula fails (e.g. ℓ out of range, a
    /// degree below the formula's minimum). The message names the clause.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// The support family is outside what the engine evaluates (e.g. a
    /// projective request for box supports).
    #[error("unsupported support family: {0}")]
    Unsupported(String),

    /// Inconsistent dimensions between supports, degree data, and ambient
    /// space.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A mixed-volume evaluation failed underneath.
    #[error(transparent)]
    MixedVolume(#[from] MvError),
}
