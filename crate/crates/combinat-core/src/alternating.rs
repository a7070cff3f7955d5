//! The alternating binomial partial sum `A(n, p)`.

use crate::binomial::binomial;
use num_bigint::BigInt;

/// `A(n, p) = Σ_{i=0}^{⌊(n−p)/2⌋} C(n−2i, p)`: the sum of binomial
/// coefficients with fixed lower index `p` taken over upper indices of the
/// same parity as `n`, descending from `n`.
///
/// Satisfies the two exact identities used as cross-checks throughout the
/// test suite:
/// `A(n,p) + A(n−1,p) = C(n+1, p+1)` and `A(n,p) − A(n−1,p) = A(n−1, p−1)`.
///
/// # Panics
/// Panics unless `n ≥ p ≥ 0`.
pub fn alternating_binomial(n: i64, p: i64) -> BigInt {
    assert!(n >= p && p >= 0, "alternating_binomial requires n >= p >= 0");
    let mut total = BigInt::ZERO;
    let mut upper = n;
    while upper >= p {
        total += binomial(upper, p);
        upper -= 2;
    }
    total
}
