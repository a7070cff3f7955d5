use thiserror::Error;

/// Errors from polytope construction and mixed-volume evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    /// The query mixes families that none of the closed-form strategies
    /// covers. The caller can try [`crate::mixed_volume_oracle_interpolation`],
    /// which handles any combination whose scaled Minkowski sums stay inside
    /// the closed-form volume classes. Never a silent approximation.
    #[error("mixed volume needs interpolation oracle: {0}")]
    NeedsInterpolationOracle(String),

    /// Even the interpolation oracle cannot evaluate this combination: some
    /// Minkowski sum of the scaled bodies leaves the closed-form volume
    /// classes (e.g. a box summed with a higher-dimensional simplex).
    #[error("unsupported polytope combination: {0}")]
    Unsupported(String),

    /// Malformed input: inconsistent ambient dimensions, multiplicities, or
    /// index sets.
    #[error("shape mismatch: {0}")]
    Shape(String),
}
