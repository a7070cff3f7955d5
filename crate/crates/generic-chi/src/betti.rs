//! Total Z₂-Betti numbers of generic zero sets, affine and projective,
//! driven by the face-expansion χ engine.

use crate::error::ChiError;
use crate::khovanskii::chi_khovanskii;
use crate::system::{ChiReport, GenericSystem, Setting};
use num_bigint::BigInt;
use polytope_mv::Polytope;

/// Degrees of the supports when all of them are (full) scaled simplices —
/// the shape the projective slicing argument needs.
fn simplex_degrees(sys: &GenericSystem) -> Result<Vec<BigInt>, ChiError> {
    sys.supports()
        .iter()
        .map(|p| match p.canonical() {
            Polytope::Simplex { degree, .. } => Ok(degree),
            // In ambient dimension 1 a degree-d simplex canonicalizes to the
            // segment [0,d].
            Polytope::AxisBox { sides } if sides.len() == 1 => Ok(sides[0].clone()),
            other => Err(ChiError::Unsupported(format!(
                "projective Betti numbers need total-degree (simplex) supports; \
                 found {other:?}"
            ))),
        })
        .collect()
}

/// χ and total Betti number of the zero set of a generic system.
///
/// Affine: χ from the face expansion, `b = 1 + (−1)^{k−ℓ+1} + (−1)^{k−ℓ}χ`.
/// Projective (simplex supports only): χ is the sum of affine χ over ambient
/// dimensions ℓ…k — the coordinate-chart slicing of projective space — and
/// `b = (1 + (−1)^{k−ℓ+1})(k−ℓ+1) + (−1)^{k−ℓ}χ`.
///
/// # Errors
/// [`ChiError::Unsupported`] for a projective request on non-simplex
/// supports; otherwise as [`chi_khovanskii`].
pub fn betti_generic(sys: &GenericSystem, setting: Setting) -> Result<ChiReport, ChiError> {
    let k = sys.ambient();
    let ell = sys.ell();
    match setting {
        Setting::Affine => Ok(ChiReport::affine(k, ell, chi_khovanskii(sys)?)),
        Setting::Projective => {
            let degrees = simplex_degrees(sys)?;
            let mut chi = BigInt::ZERO;
            for j in ell..=k {
                let supports = degrees
                    .iter()
                    .map(|d| Polytope::full_simplex(j, d.clone()))
                    .collect();
                let slice = GenericSystem::new(j, supports)?;
                chi += chi_khovanskii(&slice)?;
            }
            Ok(ChiReport::projective(k, ell, chi))
        }
    }
}
