//! Exact Euler characteristics and Betti sums for systems of generic
//! quadrics, affine and projective, in closed form.

use crate::error::ChiError;
use crate::system::ChiReport;
use combinat_core::binomial;
use num_bigint::BigInt;
use num_traits::One;

/// χ of the affine zero set of ℓ generic quadrics in k variables:
/// `1 + (−1)^{k+1} Σ_{h=0}^{ℓ−1} binom(k,h)(−2)^h`.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k.
pub fn quadrics_affine_chi(k: usize, ell: usize) -> Result<BigInt, ChiError> {
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {k}"
        )));
    }
    let mut inner = BigInt::ZERO;
    for h in 0..ell {
        inner += binomial(k as i64, h as i64) * BigInt::from(-2).pow(h as u32);
    }
    let sign = if (k + 1) % 2 == 0 {
        BigInt::one()
    } else {
        BigInt::from(-1)
    };
    Ok(BigInt::one() + sign * inner)
}

/// The signed h-term of the projective quadric χ:
/// `B(h,k,ℓ) = 2^h · Σ_{j=ℓ}^{k} (−1)^{j+1} binom(j,h)`. At `h = ℓ−1` this
/// is nonnegative and carries the leading asymptotics `2^{ℓ−2}binom(k,ℓ−1)`.
pub fn quadrics_b(h: usize, k: usize, ell: usize) -> BigInt {
    let mut inner = BigInt::ZERO;
    for j in ell..=k {
        let sign = if (j + 1) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        inner += sign * binomial(j as i64, h as i64);
    }
    BigInt::from(2u64).pow(h as u32) * inner
}

/// Exact χ and total Betti number of ℓ generic quadrics in projective
/// k-space: `χ = (k−ℓ+1) + Σ_{h=0}^{ℓ−1} (−2)^h (Σ_{j=ℓ}^{k} (−1)^{j+1}
/// binom(j,h))`, converted through the projective identity.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ < k.
pub fn quadrics_projective(k: usize, ell: usize) -> Result<ChiReport, ChiError> {
    if ell < 1 || ell >= k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ < k; got ℓ = {ell}, k = {k}"
        )));
    }
    let mut chi = BigInt::from((k - ell + 1) as u64);
    for h in 0..ell {
        // (−2)^h · Σ_j (−1)^{j+1} binom(j,h) = (−1)^h · B(h,k,ℓ).
        let term = quadrics_b(h, k, ell);
        chi += if h % 2 == 0 { term } else { -term };
    }
    Ok(ChiReport::projective(k, ell, chi))
}
