use thiserror::Error;

/// Errors raised by the combinatorial primitives.
///
/// These all signal *malformed input data* (inconsistent dimensions or
/// margins), never arithmetic failure — the arithmetic itself is exact and
/// total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    /// Row and column margins of a contingency table disagree.
    #[error("margin totals differ: rows sum to {rows}, columns sum to {cols}")]
    MarginMismatch { rows: u64, cols: u64 },

    /// The parts of a multinomial coefficient do not sum to `n`.
    #[error("multinomial parts sum to {parts}, expected {n}")]
    PartsMismatch { n: i64, parts: i64 },

    /// A multinomial part or vector/matrix entry was negative.
    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: String },

    /// Matrix data length does not match the declared shape.
    #[error("matrix declared {rows}x{cols} but {len} entries were supplied")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
}
