//! The refined total-degree bound for real varieties: a minimum of an
//! alternating-sum expression built from two per-subset factors and the
//! halved classical power bound.

use crate::error::BoundError;
use crate::result::BoundResult;
use combinat_core::{binomial, binomial_general, factorial, ExactScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// The least even integer ≥ `d`.
pub fn round_up_even(d: u64) -> u64 {
    d + (d & 1)
}

/// `(−1)^{k−j+1}` as a `BigInt`, computed without usize underflow.
pub(crate) fn sign_flip(k: usize, j: usize) -> BigInt {
    if (k + j + 1) % 2 == 0 {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

fn require_even(d_prime: u64) -> Result<(), BoundError> {
    if d_prime % 2 != 0 || d_prime < 2 {
        return Err(BoundError::hypothesis(format!(
            "factor requires an even degree >= 2 (round up first); got {d_prime}"
        )));
    }
    Ok(())
}

fn require_factor_index(k: usize, j: usize) -> Result<(), BoundError> {
    if j < 1 || j + 1 > k {
        return Err(BoundError::hypothesis(format!(
            "factor index must satisfy 1 <= j <= k-1; got j = {j}, k = {k}"
        )));
    }
    Ok(())
}

/// First per-subset factor of the refined total-degree bound: the exact
/// Betti sum of a generic variety cut by one quadric and `j−1` polynomials
/// of degree `d'`, as the literal alternating double sum
/// `1 + (−1)^{k−j+1} + 2 d'^{j−1} Σ_{h=0}^{k−j} Σ_{i=0}^{h}
///  (−1)^{k−j+h} C(k,h+j) C(j+i−2,i) 2^{h−i} d'^i`.
///
/// # Errors
/// [`BoundError::Hypothesis`] if `d'` is odd or `< 2`, or unless
/// `1 ≤ j ≤ k−1`.
pub fn f1(d_prime: u64, k: usize, j: usize) -> Result<BigInt, BoundError> {
    require_even(d_prime)?;
    require_factor_index(k, j)?;
    let d = BigInt::from(d_prime);
    let mut inner = BigInt::ZERO;
    for h in 0..=(k - j) {
        let sign = sign_flip(k, j + h + 1); // (−1)^{k−j+h}
        for i in 0..=h {
            let pair = binomial_general(&BigInt::from(j as i64 + i as i64 - 2), i as i64);
            inner += &sign
                * binomial(k as i64, (h + j) as i64)
                * pair
                * BigInt::from(2u32).pow((h - i) as u32)
                * d.pow(i as u32);
        }
    }
    Ok(BigInt::one() + sign_flip(k, j) + BigInt::from(2) * d.pow((j - 1) as u32) * inner)
}

/// Second per-subset factor: the bound for a generic variety cut by `j`
/// polynomials of degree `d'`, `1 + (−1)^{k−j+1} + C(k−1,j−1)(d'^k + k − 1)`.
///
/// # Errors
/// Same hypotheses as [`f1`].
pub fn f2(d_prime: u64, k: usize, j: usize) -> Result<BigInt, BoundError> {
    require_even(d_prime)?;
    require_factor_index(k, j)?;
    let d = BigInt::from(d_prime);
    Ok(BigInt::one()
        + sign_flip(k, j)
        + binomial((k - 1) as i64, (j - 1) as i64) * (d.pow(k as u32) + BigInt::from(k as u64 - 1)))
}

/// Upper bound on the total Betti numbers of a real variety cut out by any
/// number of polynomials of total degree ≤ `d` in `k` variables:
/// the minimum of the alternating-sum arm (evaluated at the rounded-up even
/// degree) and `(1 + (2d−1)^k)/2`. The winning arm is recorded; ties report
/// the first arm.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `ell ≥ 1`, `d ≥ 1`, `k ≥ 1`.
pub fn total_degree_variety_bound(
    d: u64,
    k: usize,
    ell: usize,
) -> Result<BoundResult, BoundError> {
    if ell < 1 || d < 1 || k < 1 {
        return Err(BoundError::hypothesis(format!(
            "need ell >= 1, d >= 1, k >= 1; got ell = {ell}, d = {d}, k = {k}"
        )));
    }
    let d_prime = round_up_even(d);

    let mut sum_arm = BigInt::from(3);
    for j in 1..k {
        let choose = binomial(ell as i64, j as i64);
        if choose == BigInt::ZERO {
            continue;
        }
        sum_arm +=
            choose * BigInt::from(2u32).pow(j as u32) * (f1(d_prime, k, j)? + f2(d_prime, k, j)?);
    }
    sum_arm += binomial(ell as i64, k as i64)
        * BigInt::from(2u32).pow(k as u32)
        * BigInt::from(d_prime).pow(k as u32);

    let odd_power = BigInt::one() + BigInt::from(2 * d - 1).pow(k as u32);
    let half_arm = BigRational::new(odd_power, BigInt::from(2));

    let sum_arm = BigRational::from(sum_arm);
    let (value, branch) = if sum_arm <= half_arm {
        (sum_arm, "alternating-sum")
    } else {
        (half_arm, "half-power")
    };
    Ok(BoundResult::checked(
        value,
        "total-degree",
        vec![
            format!("ell = {ell} >= 1"),
            format!("d = {d} >= 1"),
            format!("k = {k} >= 1"),
        ],
        Some(branch.to_string()),
        true,
    ))
}

/// The pair of leading coefficients (in `k^{ℓ−1}`, for `d → ∞`) compared in
/// the regime report: the alternating-sum bound's `ℓ(3^ℓ−1)/(ℓ−1)!` against
/// the classical component bound's `(ℓ+1)/2`. The first is eventually the
/// smaller one (for `ℓ > 8`).
///
/// # Panics
/// Panics if `ell == 0`.
pub fn leading_coefficient_comparison(ell: usize) -> (ExactScalar, ExactScalar) {
    assert!(ell >= 1, "leading coefficients are defined for ell >= 1");
    let ours = BigRational::new(
        BigInt::from(ell as u64) * (BigInt::from(3u32).pow(ell as u32) - BigInt::one()),
        factorial(ell - 1),
    );
    let classical = BigRational::new(BigInt::from(ell as u64 + 1), BigInt::from(2));
    (ours, classical)
}
