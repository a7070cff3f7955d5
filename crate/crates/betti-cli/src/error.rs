//! Process-level error type: every failure class owns one stable exit code.

use bound_catalog::BoundError;
use generic_chi::ChiError;
use polytope_mv::MvError;
use thiserror::Error;

/// Failures surfaced to the shell. Scripts can branch on the exit code
/// without parsing messages.
#[derive(Debug, Error)]
pub enum CliError {
    /// A verification suite or cross-check ran to completion and found a
    /// genuine failure (counterexamples are in the message).
    #[error("{0}")]
    Failed(String),

    /// The requested bound id is not in the catalog.
    #[error("unknown bound id {id:?}; known ids: {known}")]
    UnknownId { id: String, known: String },

    /// A stated hypothesis of the requested formula is violated by the
    /// parameters. Parameters are rejected, never clamped into range.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// The chosen id needs a parameter that was not supplied. Exits like a
    /// hypothesis violation; `compare` upgrades it to a shape mismatch when
    /// an id cannot be bound to the shared grid.
    #[error("bound {id:?} requires --{name}")]
    MissingParam { id: String, name: &'static str },

    /// The request names a family, engine, or combination outside the
    /// implemented range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Inconsistent parameter shapes: ragged matrices, mismatched lengths,
    /// or ids that cannot all be bound to the same grid.
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Exit-code contract: 1 suite failure or I/O, 2 unknown id,
    /// 3 hypothesis violation, 4 unsupported family, 5 shape mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::UnknownId { .. } => 2,
            CliError::Hypothesis(_) | CliError::MissingParam { .. } => 3,
            CliError::Unsupported(_) => 4,
            CliError::Shape(_) => 5,
        }
    }

    pub fn hypothesis(msg: impl Into<String>) -> Self {
        CliError::Hypothesis(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        CliError::Unsupported(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        CliError::Shape(msg.into())
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Hypothesis { clause } => CliError::Hypothesis(clause),
            BoundError::UnknownId { id, known } => CliError::UnknownId { id, known },
        }
    }
}

impl From<MvError> for CliError {
    fn from(e: MvError) -> Self {
        match e {
            MvError::NeedsInterpolationOracle(msg) => CliError::Unsupported(format!(
                "{msg} (retry with --oracle to use the interpolation evaluator)"
            )),
            MvError::Unsupported(msg) => CliError::Unsupported(msg),
            MvError::Shape(msg) => CliError::Shape(msg),
        }
    }
}

impl From<ChiError> for CliError {
    fn from(e: ChiError) -> Self {
        match e {
            ChiError::Hypothesis(msg) => CliError::Hypothesis(msg),
            ChiError::Unsupported(msg) => CliError::Unsupported(msg),
            ChiError::Shape(msg) => CliError::Shape(msg),
            ChiError::MixedVolume(inner) => inner.into(),
        }
    }
}
