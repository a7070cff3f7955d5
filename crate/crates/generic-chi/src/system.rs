//! Generic polynomial systems described by their Newton polytopes, and the
//! χ ↔ total-Betti-number conversions for their zero sets.

use crate::error::ChiError;
use combinat_core::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use polytope_mv::Polytope;
use std::collections::BTreeSet;

/// A system of ℓ generic polynomials in k variables, described by one
/// Newton polytope per polynomial. Genericity itself is an assumption, not
/// something checked here; what *is* checked is that each support is
/// full-dimensional, the condition under which the Euler-characteristic
/// expansion over coordinate faces is valid for these families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericSystem {
    ambient: usize,
    supports: Vec<Polytope>,
}

/// Coordinates in which the body has positive extent; the body is
/// full-dimensional exactly when this covers the ambient set.
fn covered_coords(p: &Polytope, into: &mut BTreeSet<usize>) {
    match p {
        Polytope::Simplex { degree, vars, .. } => {
            if !degree.is_zero() {
                into.extend(vars.iter().copied());
            }
        }
        Polytope::AxisBox { sides } => {
            into.extend(
                sides
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(v, _)| v),
            );
        }
        Polytope::BlockProduct { blocks, .. } => {
            for (vars, d) in blocks {
                if !d.is_zero() {
                    into.extend(vars.iter().copied());
                }
            }
        }
        Polytope::Sum { members, .. } => {
            for m in members {
                covered_coords(m, into);
            }
        }
    }
}

impl GenericSystem {
    /// System with one support per polynomial.
    ///
    /// # Errors
    /// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k and every support is
    /// full-dimensional in `R^ambient`; [`ChiError::Shape`] on ambient
    /// mismatches.
    pub fn new(ambient: usize, supports: Vec<Polytope>) -> Result<Self, ChiError> {
        let ell = supports.len();
        if ell < 1 || ell > ambient {
            return Err(ChiError::Hypothesis(format!(
                "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {ambient}"
            )));
        }
        for (j, p) in supports.iter().enumerate() {
            if p.ambient() != ambient {
                return Err(ChiError::Shape(format!(
                    "support {j} lives in dimension {}, system in {ambient}",
                    p.ambient()
                )));
            }
            let mut covered = BTreeSet::new();
            covered_coords(p, &mut covered);
            if covered.len() != ambient {
                return Err(ChiError::Hypothesis(format!(
                    "support {j} is not full-dimensional (extent in {} of {ambient} \
                     coordinates); the face expansion requires full-dimensional supports",
                    covered.len()
                )));
            }
        }
        Ok(GenericSystem { ambient, supports })
    }

    /// ℓ polynomials sharing one support.
    pub fn shared(ambient: usize, ell: usize, support: Polytope) -> Result<Self, ChiError> {
        GenericSystem::new(ambient, vec![support; ell])
    }

    /// Dense polynomials of total degrees `degrees` in k variables
    /// (full-simplex supports).
    pub fn total_degrees(ambient: usize, degrees: &[u64]) -> Result<Self, ChiError> {
        let supports = degrees
            .iter()
            .map(|&d| Polytope::full_simplex(ambient, d))
            .collect();
        GenericSystem::new(ambient, supports)
    }

    /// ℓ generic quadrics in k variables.
    pub fn quadrics(ambient: usize, ell: usize) -> Result<Self, ChiError> {
        GenericSystem::shared(ambient, ell, Polytope::full_simplex(ambient, 2))
    }

    /// Multi-degree polynomials: row i of `d` gives the per-variable degree
    /// cap of polynomial i (box supports).
    pub fn boxes(d: &IntMatrix) -> Result<Self, ChiError> {
        let supports = (0..d.rows())
            .map(|i| {
                Polytope::axis_box(d.row(i).to_vec())
                    .map_err(|e| ChiError::Shape(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        GenericSystem::new(d.cols(), supports)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn ell(&self) -> usize {
        self.supports.len()
    }

    pub fn supports(&self) -> &[Polytope] {
        &self.supports
    }
}

/// Where the zero set is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    Affine,
    Projective,
}

/// χ and the total Z₂-Betti number of a generic zero set, with the identity
/// that links them. Every value here is a complex-variety quantity; by
/// Smith theory it doubles as an upper bound for the corresponding real
/// zero set, which [`ChiReport::real_bound_via_smith`] records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: BigInt,
    pub betti_sum: BigInt,
    /// (k, ℓ): ambient dimension and number of polynomials.
    pub ambient: (usize, usize),
    pub setting: Setting,
    /// The identity that produced `betti_sum` from `chi`.
    pub conversion: &'static str,
    /// Always true: the complex value bounds the real Betti sum from above.
    pub real_bound_via_smith: bool,
}

pub(crate) const AFFINE_CONVERSION: &str = "b = 1 + (-1)^(k-l+1) + (-1)^(k-l)*chi";
pub(crate) const PROJECTIVE_CONVERSION: &str =
    "b = (1 + (-1)^(k-l+1))*(k-l+1) + (-1)^(k-l)*chi";

/// `(−1)^{k−ℓ}` as a BigInt sign.
pub(crate) fn sign(k: usize, ell: usize) -> BigInt {
    if (k as i64 - ell as i64).rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

impl ChiReport {
    /// Affine report: `b = 1 + (−1)^{k−ℓ+1} + (−1)^{k−ℓ}·χ`.
    pub fn affine(k: usize, ell: usize, chi: BigInt) -> ChiReport {
        let s = sign(k, ell);
        let betti_sum = BigInt::from(1) - &s + &s * &chi;
        ChiReport {
            chi,
            betti_sum,
            ambient: (k, ell),
            setting: Setting::Affine,
            conversion: AFFINE_CONVERSION,
            real_bound_via_smith: true,
        }
    }

    /// Projective report: `b = (1 + (−1)^{k−ℓ+1})(k−ℓ+1) + (−1)^{k−ℓ}·χ`.
    pub fn projective(k: usize, ell: usize, chi: BigInt) -> ChiReport {
        let s = sign(k, ell);
        let betti_sum =
            (BigInt::from(1) - &s) * BigInt::from((k - ell + 1) as u64) + &s * &chi;
        ChiReport {
            chi,
            betti_sum,
            ambient: (k, ell),
            setting: Setting::Projective,
            conversion: PROJECTIVE_CONVERSION,
            real_bound_via_smith: true,
        }
    }

    /// Re-derives `betti_sum` from `chi` through the stated conversion;
    /// exposed so tests can assert the roundtrip on every report.
    pub fn conversion_holds(&self) -> bool {
        let (k, ell) = self.ambient;
        let expected = match self.setting {
            Setting::Affine => ChiReport::affine(k, ell, self.chi.clone()).betti_sum,
            Setting::Projective => ChiReport::projective(k, ell, self.chi.clone()).betti_sum,
        };
        expected == self.betti_sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_affine_conversion_signs() {
        // k−ℓ even: b = χ; k−ℓ odd: b = 2 − χ.
        let even = ChiReport::affine(2, 2, BigInt::from(4));
        assert_eq!(even.betti_sum, BigInt::from(4));
        let odd = ChiReport::affine(3, 2, BigInt::from(-4));
        assert_eq!(odd.betti_sum, BigInt::from(6));
        assert!(even.conversion_holds() && odd.conversion_holds());
    }

    #[test]
    fn test_projective_conversion_signs() {
        // k−ℓ odd: b = 2(k−ℓ+1) − χ.
        let rep = ChiReport::projective(3, 2, BigInt::from(0));
        assert_eq!(rep.betti_sum, BigInt::from(4));
        // k−ℓ even: b = χ.
        let rep = ChiReport::projective(4, 2, BigInt::from(7));
        assert_eq!(rep.betti_sum, BigInt::from(7));
    }

    #[test]
    fn test_system_validation() {
        assert!(GenericSystem::quadrics(3, 2).is_ok());
        // ℓ > k rejected.
        assert!(matches!(
            GenericSystem::quadrics(2, 3),
            Err(ChiError::Hypothesis(_))
        ));
        // Flat support rejected.
        let flat = Polytope::simplex(3, 2, &[0, 1]).unwrap();
        assert!(matches!(
            GenericSystem::new(3, vec![flat]),
            Err(ChiError::Hypothesis(_))
        ));
        // Box with a zero side rejected.
        let sys = GenericSystem::boxes(&IntMatrix::from_rows(&[vec![2, 0, 1]]));
        assert!(matches!(sys, Err(ChiError::Hypothesis(_))));
    }
}
