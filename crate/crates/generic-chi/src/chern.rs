//! Independent χ oracle from Chern-class arithmetic: the projective Euler
//! characteristic of a smooth complete intersection has a closed form in
//! binomials and complete homogeneous symmetric polynomials of the degrees,
//! and the affine value follows by slicing off a hyperplane section.

use crate::error::ChiError;
use combinat_core::{binomial, complete_homogeneous, IntVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn check_degrees(k: usize, d: &IntVector) -> Result<Vec<BigInt>, ChiError> {
    let ell = d.len();
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {k}"
        )));
    }
    if d.iter().any(Zero::is_zero) {
        return Err(ChiError::Hypothesis("degrees must satisfy d_i ≥ 1".into()));
    }
    Ok(d.iter().cloned().collect())
}

/// χ of a smooth complete intersection of multidegree `d` in projective
/// k-space: `Πd_i · Σ_{i=0}^{k−ℓ} (−1)^{k−ℓ−i} binom(k+1,i) h_{k−ℓ−i}(d)`.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k and every dᵢ ≥ 1.
pub fn chern_chi_projective(k: usize, d: &IntVector) -> Result<BigInt, ChiError> {
    let degrees = check_degrees(k, d)?;
    let ell = degrees.len();
    let mut inner = BigInt::ZERO;
    for i in 0..=(k - ell) {
        let sign = if (k - ell - i) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        inner += sign
            * binomial(k as i64 + 1, i as i64)
            * complete_homogeneous(k - ell - i, &degrees);
    }
    let product: BigInt = degrees.iter().product();
    Ok(product * inner)
}

/// Affine χ by a Lefschetz-style slice: the affine zero set is the
/// projective one minus its hyperplane section, so
/// `χ_aff(k,d) = χ_proj(k,d) − χ_proj(k−1,d)` with the same degrees.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k−1 (the slice must stay a
/// complete intersection).
pub fn lefschetz_chi_affine(k: usize, d: &IntVector) -> Result<BigInt, ChiError> {
    if d.len() > k.saturating_sub(1) {
        return Err(ChiError::Hypothesis(format!(
            "affine slicing needs ℓ ≤ k−1; got ℓ = {}, k = {k}",
            d.len()
        )));
    }
    Ok(chern_chi_projective(k, d)? - chern_chi_projective(k - 1, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_u64(entries: &[u64]) -> IntVector {
        IntVector::from_u64s(entries)
    }

    #[test]
    fn test_quadric_surface() {
        // Smooth quadric in P³ is P¹×P¹: χ = 4.
        assert_eq!(
            chern_chi_projective(3, &vec_u64(&[2])).unwrap(),
            BigInt::from(4)
        );
    }

    #[test]
    fn test_plane_curve_genus_formula() {
        // Degree-d curve in P²: χ = 2 − 2g = 2 − (d−1)(d−2) = 3d − d².
        for d in 1..=6i64 {
            assert_eq!(
                chern_chi_projective(2, &vec_u64(&[d as u64])).unwrap(),
                BigInt::from(3 * d - d * d),
                "d={d}"
            );
        }
    }

    #[test]
    fn test_elliptic_curve_intersection() {
        // Two quadrics in P³ cut an elliptic curve: χ = 0.
        assert_eq!(
            chern_chi_projective(3, &vec_u64(&[2, 2])).unwrap(),
            BigInt::ZERO
        );
    }

    #[test]
    fn test_affine_boundary_preconditions() {
        // ℓ = k−1 accepted, ℓ = k rejected.
        assert!(lefschetz_chi_affine(3, &vec_u64(&[2, 2])).is_ok());
        assert!(matches!(
            lefschetz_chi_affine(3, &vec_u64(&[2, 2, 2])),
            Err(ChiError::Hypothesis(_))
        ));
    }

    #[test]
    fn test_affine_conic_is_punctured_sphere() {
        // χ_aff(2, d=2) = χ(P¹) − χ(2 points) = 0.
        assert_eq!(
            lefschetz_chi_affine(2, &vec_u64(&[2])).unwrap(),
            BigInt::ZERO
        );
    }
}
