//! Binomial and multinomial coefficients.

use crate::error::CombinatError;
use crate::factorial::{factorial, falling_factorial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, r)` for nonnegative upper index.
///
/// Conventions, chosen so that every sum in this workspace can run over its
/// natural index range without edge-case guards:
/// - `r < 0` → 0
/// - `r = 0` → 1 for *any* `n` (including negative: the empty product)
/// - `n ≥ 0`, `r > n` → 0
///
/// A negative `n` with `r ≥ 1` is a contract violation here: the classical
/// coefficient is undefined and silently extending it would change sums.
/// The one evaluator that genuinely needs the falling-factorial extension
/// calls [`binomial_general`] explicitly.
///
/// # Panics
/// Panics if `n < 0` and `r ≥ 1`.
pub fn binomial(n: i64, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    if r == 0 {
        return BigInt::one();
    }
    assert!(
        n >= 0,
        "binomial({n}, {r}): negative upper index requires binomial_general"
    );
    if r > n {
        return BigInt::zero();
    }
    let (n, r) = (n as usize, r as usize);
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// Generalized binomial coefficient via the falling factorial,
/// `n·(n−1)···(n−r+1) / r!`, valid for any integer upper index.
///
/// Agrees with [`binomial`] on `n ≥ 0` and extends it by, e.g.,
/// `C(−1, r) = (−1)^r`. Only call sites that document why the extension is
/// meaningful use this.
pub fn binomial_general(n: &BigInt, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    let r = r as usize;
    falling_factorial(n, r) / factorial(r)
}

/// Multinomial coefficient `n! / (parts₁! · parts₂! ⋯)`.
///
/// # Errors
/// [`CombinatError::PartsMismatch`] if the parts do not sum to `n`;
/// [`CombinatError::NegativeEntry`] if any part is negative.
pub fn multinomial(n: i64, parts: &[i64]) -> Result<BigInt, CombinatError> {
    if let Some((index, &value)) = parts.iter().enumerate().find(|(_, &p)| p < 0) {
        return Err(CombinatError::NegativeEntry {
            index,
            value: value.to_string(),
        });
    }
    let total: i64 = parts.iter().sum();
    if total != n || n < 0 {
        return Err(CombinatError::PartsMismatch { n, parts: total });
    }
    let mut denom = BigInt::one();
    for &p in parts {
        denom *= factorial(p as usize);
    }
    Ok(factorial(n as usize) / denom)
}
