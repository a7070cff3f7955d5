//! Euler characteristics of generic zero sets from mixed volumes of the
//! coordinate faces of their Newton polytopes.
//!
//! For a generic system with full-dimensional supports Δ₁,…,Δ_ℓ in `R^k`,
//! χ of the affine zero set is a sum over coordinate subsets I ⊆ [k]: the
//! face Δ_j^I (coordinates in I set to zero) lives in dimension κ = k−|I|,
//! and contributes
//!
//! `(−1)^{κ−ℓ} Σ_m κ!·MV(Δ₁^I×m₁, …, Δ_ℓ^I×m_ℓ)`
//!
//! over positive compositions m of κ into ℓ parts (the degree-κ Taylor
//! component of Π_j Δ_j^I/(1+Δ_j^I)); faces with κ < ℓ contribute 0 because
//! each factor starts at degree one.

use crate::error::ChiError;
use crate::system::GenericSystem;
use combinat_core::factorial;
use num_bigint::BigInt;
use num_traits::Zero;
use num_rational::BigRational;
use polytope_mv::{mixed_volume, MixedVolumeQuery, Polytope};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest ambient dimension worth splitting the 2^k subset loop for.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 10;

/// All compositions of `total` into `parts` positive parts.
pub(crate) fn positive_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 1..=rest - (parts - 1) {
            prefix.push(v);
            go(rest - v, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Signed face term for the coordinates in `zeroed` set to zero.
fn face_contribution(sys: &GenericSystem, zeroed: &[usize]) -> Result<BigRational, ChiError> {
    let kappa = sys.ambient() - zeroed.len();
    let ell = sys.ell();
    if kappa < ell {
        return Ok(BigRational::zero());
    }
    let faces: Vec<Polytope> = sys
        .supports()
        .iter()
        .map(|p| p.face_at_zero(zeroed))
        .collect::<Result<_, _>>()?;
    let mut acc = BigRational::zero();
    for m in positive_compositions(kappa, ell) {
        let q = MixedVolumeQuery::new(faces.clone(), m)?;
        acc += mixed_volume(&q)?;
    }
    acc *= BigRational::from_integer(factorial(kappa));
    if (kappa - ell) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// True when the support is invariant under permuting coordinates, so face
/// terms depend only on |I|.
fn coordinate_symmetric(p: &Polytope) -> bool {
    match p.canonical() {
        Polytope::AxisBox { sides } => sides.windows(2).all(|w| w[0] == w[1]),
        Polytope::Simplex { ambient, vars, .. } => vars.len() == ambient,
        _ => false,
    }
}

fn to_integer(total: BigRational) -> BigInt {
    assert!(
        total.is_integer(),
        "Euler characteristic must be an integer; face terms summed to {total}"
    );
    total.to_integer()
}

/// χ of the affine zero set via the symmetric shortcut: every support is
/// coordinate-permutation invariant, so sum `binom(k,i)` copies of one face
/// term per subset size.
fn chi_symmetric(sys: &GenericSystem) -> Result<BigInt, ChiError> {
    let k = sys.ambient();
    let mut total = BigRational::zero();
    for i in 0..=k {
        let zeroed: Vec<usize> = (0..i).collect();
        let term = face_contribution(sys, &zeroed)?;
        total += term * BigRational::from_integer(combinat_core::binomial(k as i64, i as i64));
    }
    Ok(to_integer(total))
}

/// χ of the affine zero set, enumerating all 2^k coordinate subsets
/// sequentially.
///
/// # Errors
/// Propagates face/mixed-volume failures for supports outside the
/// closed-form families.
pub fn chi_khovanskii_seq(sys: &GenericSystem) -> Result<BigInt, ChiError> {
    let k = sys.ambient();
    if sys.supports().iter().all(coordinate_symmetric) {
        return chi_symmetric(sys);
    }
    let mut total = BigRational::zero();
    for mask in 0..1u64 << k {
        total += face_contribution(sys, &mask_to_coords(mask, k))?;
    }
    Ok(to_integer(total))
}

/// χ of the affine zero set with the subset loop split across threads.
/// Exact rational addition makes the result bit-identical to the
/// sequential kernel.
///
/// # Errors
/// As [`chi_khovanskii_seq`].
#[cfg(feature = "parallel")]
pub fn chi_khovanskii_par(sys: &GenericSystem) -> Result<BigInt, ChiError> {
    let k = sys.ambient();
    if sys.supports().iter().all(coordinate_symmetric) {
        return chi_symmetric(sys);
    }
    if k < PAR_THRESHOLD {
        return chi_khovanskii_seq(sys);
    }
    let terms: Result<Vec<BigRational>, ChiError> = (0..1u64 << k)
        .into_par_iter()
        .map(|mask| face_contribution(sys, &mask_to_coords(mask, k)))
        .collect();
    Ok(to_integer(terms?.into_iter().sum()))
}

/// χ of the affine zero set of a generic system, using the parallel subset
/// loop when the `parallel` feature is enabled.
///
/// # Errors
/// As [`chi_khovanskii_seq`].
pub fn chi_khovanskii(sys: &GenericSystem) -> Result<BigInt, ChiError> {
    #[cfg(feature = "parallel")]
    {
        chi_khovanskii_par(sys)
    }
    #[cfg(not(feature = "parallel"))]
    {
        chi_khovanskii_seq(sys)
    }
}

fn mask_to_coords(mask: u64, k: usize) -> Vec<usize> {
    (0..k).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Forces the full 2^k enumeration even for symmetric supports; only used
/// by tests to validate the shortcut.
#[doc(hidden)]
pub fn chi_khovanskii_enumerated(sys: &GenericSystem) -> Result<BigInt, ChiError> {
    let k = sys.ambient();
    let mut total = BigRational::zero();
    for mask in 0..1u64 << k {
        total += face_contribution(sys, &mask_to_coords(mask, k))?;
    }
    Ok(to_integer(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinat_core::IntMatrix;
    use num_traits::One;

    fn one() -> BigInt {
        BigInt::one()
    }

    #[test]
    fn test_composition_counts() {
        assert_eq!(positive_compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(positive_compositions(4, 4), vec![vec![1, 1, 1, 1]]);
        assert!(positive_compositions(2, 3).is_empty());
    }

    #[test]
    fn test_single_hypersurface_closed_form() {
        // χ = 1 + (−1)^{k−1}(d−1)^k.
        for k in 1..=5usize {
            for d in 1..=4u64 {
                let sys = GenericSystem::total_degrees(k, &[d]).unwrap();
                let expected = one()
                    + BigInt::from(-1).pow((k - 1) as u32) * BigInt::from(d - 1).pow(k as u32);
                assert_eq!(chi_khovanskii(&sys).unwrap(), expected, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn test_two_quadrics_in_three_vars() {
        let sys = GenericSystem::quadrics(3, 2).unwrap();
        assert_eq!(chi_khovanskii(&sys).unwrap(), BigInt::from(-4));
    }

    #[test]
    fn test_zero_dimensional_system_counts_points() {
        // ℓ = k: χ = Π d_i (finite generic fiber).
        let sys = GenericSystem::total_degrees(3, &[2, 3, 4]).unwrap();
        assert_eq!(chi_khovanskii(&sys).unwrap(), BigInt::from(24));
    }

    #[test]
    fn test_symmetric_shortcut_matches_enumeration() {
        for (k, ell, d) in [(3usize, 1usize, 2u64), (3, 2, 2), (4, 2, 3), (4, 4, 2)] {
            let sys = GenericSystem::total_degrees(k, &vec![d; ell]).unwrap();
            assert_eq!(
                chi_khovanskii(&sys).unwrap(),
                chi_khovanskii_enumerated(&sys).unwrap(),
                "simplex k={k} ell={ell} d={d}"
            );
            let cube = GenericSystem::boxes(&IntMatrix::from_rows(&vec![vec![d; k]; ell]))
                .unwrap();
            assert_eq!(
                chi_khovanskii(&cube).unwrap(),
                chi_khovanskii_enumerated(&cube).unwrap(),
                "cube k={k} ell={ell} d={d}"
            );
        }
    }

    #[test]
    fn test_distinct_boxes_run_through_full_enumeration() {
        let sys = GenericSystem::boxes(&IntMatrix::from_rows(&[vec![1, 2, 3]])).unwrap();
        // χ of a generic multi-degree (1,2,3) hypersurface in C³; pinned by
        // the enumerated engine and stable across refactors.
        let chi = chi_khovanskii(&sys).unwrap();
        assert_eq!(chi, chi_khovanskii_enumerated(&sys).unwrap());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn test_parallel_matches_sequential() {
        // Distinct columns defeat the symmetric shortcut; k = 10 crosses the
        // parallel threshold.
        let rows = vec![
            (1..=10u64).collect::<Vec<_>>(),
            (1..=10u64).map(|j| (j % 3) + 1).collect(),
        ];
        let sys = GenericSystem::boxes(&IntMatrix::from_rows(&rows)).unwrap();
        assert_eq!(
            chi_khovanskii_par(&sys).unwrap(),
            chi_khovanskii_seq(&sys).unwrap()
        );
    }
}
