//! Parameter bundles describing a polynomial map together with the
//! semi-algebraic data whose image or preimage is being bounded.

use bound_catalog::{BoundError, CatalogEntry};

/// The configurations supported by the map-bound evaluators.
///
/// Throughout, `d` bounds the degrees in the source variables and `d_set`
/// the degrees attached to the secondary block: the constraint polynomials
/// on the target of a pull-back, the constraints cutting the source set of
/// an image, or the second-factor degrees of a two-factor projection. The
/// fibered-power evaluators ([`Image`](MapScenario::Image) and
/// [`FourierMukai`](MapScenario::FourierMukai)) additionally require
/// `d >= d_set`, so the source block carries the larger degree.
///
/// Degrees below 2 are rejected rather than clamped — the underlying block
/// bounds assume every degree is at least 2, and how to model linear data
/// is the caller's decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapScenario {
    /// Preimage of a closed constraint set under a polynomial map
    /// `R^k -> R^m` whose coordinates have degree `<= d`; the target set is
    /// cut out by `s` polynomials of degree `<= d_set`.
    PullBack {
        k: usize,
        m: usize,
        d: u64,
        d_set: u64,
        s: u64,
    },
    /// Image of a bounded closed set `T ⊂ R^k` (cut out by `s` polynomials
    /// of degree `<= d_set`) under a polynomial map `R^k -> R^m` with
    /// coordinate degrees `<= d`, bounding the `i`-th Betti number.
    Image {
        k: usize,
        m: usize,
        d: u64,
        d_set: u64,
        s: u64,
        i: usize,
    },
    /// Projection to the second factor of `(preimage of S1) ∩ S2`, where
    /// `S1 ⊂ R^k` is cut out by `s1` polynomials and `S2 ⊂ R^k × R^m` by
    /// `s2` polynomials; degrees in the first factor are `<= d` and in the
    /// second `<= d_set`. Bounds the `i`-th Betti number of the projection.
    FourierMukai {
        k: usize,
        m: usize,
        d: u64,
        d_set: u64,
        s1: u64,
        s2: u64,
        i: usize,
    },
    /// Space of `k_prime`-dimensional affine subspaces of `R^k` meeting a
    /// bounded closed set cut out by `s` polynomials of degree `<= d`,
    /// bounding the `i`-th Betti number. The subspace family is modeled
    /// inside the space of trace-normalized symmetric matrices, so the
    /// secondary block has dimension [`transversal_ambient_dim`]`(k)` and
    /// degree 2.
    Transversal {
        k: usize,
        k_prime: usize,
        d: u64,
        s: u64,
        i: usize,
    },
}

fn require_positive_dim(name: &str, value: usize) -> Result<(), BoundError> {
    if value == 0 {
        return Err(BoundError::hypothesis(format!(
            "{name} must be at least 1 so its variable block is nonempty"
        )));
    }
    Ok(())
}

fn require_degree(name: &str, value: u64) -> Result<(), BoundError> {
    if value < 2 {
        return Err(BoundError::hypothesis(format!(
            "{name} must be >= 2 (degree-1 data is rejected rather than clamped); got {value}"
        )));
    }
    Ok(())
}

fn require_fibered_power(
    k: usize,
    m: usize,
    d: u64,
    d_set: u64,
    i: usize,
) -> Result<(), BoundError> {
    require_positive_dim("source dimension k", k)?;
    require_positive_dim("target dimension m", m)?;
    require_degree("source degree d", d)?;
    require_degree("secondary degree d_set", d_set)?;
    if d < d_set {
        return Err(BoundError::hypothesis(format!(
            "the source degree must dominate the secondary degree; got d = {d} < d_set = {d_set}"
        )));
    }
    if i > m {
        return Err(BoundError::hypothesis(format!(
            "the Betti index is controlled only up to the target dimension; got i = {i} > m = {m}"
        )));
    }
    Ok(())
}

impl MapScenario {
    /// Checks the hypotheses of the bound this scenario requests.
    ///
    /// # Errors
    /// [`BoundError::Hypothesis`] naming the violated clause: a zero
    /// dimension, a degree below 2, `d < d_set` or `i > m` for the
    /// fibered-power scenarios, or `k_prime > k` for subspace families.
    pub fn validated(&self) -> Result<(), BoundError> {
        match *self {
            MapScenario::PullBack { k, m, d, d_set, .. } => {
                require_positive_dim("source dimension k", k)?;
                require_positive_dim("target dimension m", m)?;
                require_degree("map degree d", d)?;
                require_degree("constraint degree d_set", d_set)
            }
            MapScenario::Image { k, m, d, d_set, i, .. }
            | MapScenario::FourierMukai { k, m, d, d_set, i, .. } => {
                require_fibered_power(k, m, d, d_set, i)
            }
            MapScenario::Transversal { k, k_prime, d, .. } => {
                require_positive_dim("ambient dimension k", k)?;
                if k_prime > k {
                    return Err(BoundError::hypothesis(format!(
                        "affine subspaces cannot exceed the ambient dimension; got k' = {k_prime} > k = {k}"
                    )));
                }
                require_degree("constraint degree d", d)
            }
        }
    }
}

/// Dimension of the space carrying the family of affine subspaces of `R^k`:
/// the linear space of `(k+1) × (k+1)` symmetric matrices with a fixed
/// trace, of dimension `(k+1)(k+2)/2 − 1`.
pub fn transversal_ambient_dim(k: usize) -> usize {
    (k + 1) * (k + 2) / 2 - 1
}

/// Catalog rows for the four map scenarios, in the same shape as the bound
/// registry so a dispatching caller can merge the two listings.
pub fn scenario_catalog() -> &'static [CatalogEntry] {
    static SCENARIOS: &[CatalogEntry] = &[
        CatalogEntry {
            id: "pull-back",
            summary: "total Betti numbers of the preimage of a closed set under a polynomial map",
            parameters: "k (source dim), m (target dim), d (map degree), d-set (constraint degree), s (constraints)",
        },
        CatalogEntry {
            id: "image",
            summary: "i-th Betti number of the image of a bounded closed set under a polynomial map",
            parameters: "k (source dim), m (target dim), d (map degree), d-set (constraint degree, <= d), s (constraints), i (Betti index <= m)",
        },
        CatalogEntry {
            id: "fourier-mukai",
            summary: "i-th Betti number of the second-factor projection of (preimage of S1) ∩ S2",
            parameters: "k (first-factor dim), m (second-factor dim), d (first-factor degree), d-set (second-factor degree, <= d), s1, s2 (constraints), i (Betti index <= m)",
        },
        CatalogEntry {
            id: "transversal",
            summary: "i-th Betti number of the space of affine subspaces meeting a bounded closed set",
            parameters: "k (ambient dim), k-prime (subspace dim <= k), d (constraint degree), s (constraints), i (Betti index)",
        },
    ];
    SCENARIOS
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_validation_accepts_the_theorem_hypotheses() {
        let scenarios = [
            MapScenario::PullBack { k: 1, m: 1, d: 2, d_set: 5, s: 0 },
            MapScenario::Image { k: 2, m: 2, d: 3, d_set: 2, s: 1, i: 2 },
            MapScenario::FourierMukai { k: 1, m: 2, d: 2, d_set: 2, s1: 0, s2: 0, i: 1 },
            MapScenario::Transversal { k: 3, k_prime: 0, d: 2, s: 4, i: 5 },
        ];
        for sc in scenarios {
            assert!(sc.validated().is_ok(), "{sc:?}");
        }
    }

    #[test]
    fn test_validation_rejects_each_violated_clause() {
        let bad = [
            // Zero dimensions leave an empty block.
            MapScenario::PullBack { k: 0, m: 1, d: 2, d_set: 2, s: 0 },
            MapScenario::PullBack { k: 1, m: 0, d: 2, d_set: 2, s: 0 },
            // Degrees below 2 are rejected, never clamped.
            MapScenario::PullBack { k: 1, m: 1, d: 1, d_set: 2, s: 0 },
            MapScenario::PullBack { k: 1, m: 1, d: 2, d_set: 1, s: 0 },
            MapScenario::Transversal { k: 2, k_prime: 1, d: 1, s: 1, i: 0 },
            // Fibered powers need the source degree on top.
            MapScenario::Image { k: 1, m: 1, d: 2, d_set: 3, s: 0, i: 0 },
            MapScenario::FourierMukai { k: 1, m: 1, d: 2, d_set: 3, s1: 1, s2: 1, i: 0 },
            // The Betti index stops at the target dimension.
            MapScenario::Image { k: 1, m: 2, d: 2, d_set: 2, s: 0, i: 3 },
            MapScenario::FourierMukai { k: 1, m: 2, d: 2, d_set: 2, s1: 1, s2: 0, i: 3 },
            // Subspaces cannot exceed the ambient space.
            MapScenario::Transversal { k: 2, k_prime: 3, d: 2, s: 1, i: 0 },
        ];
        for sc in bad {
            assert!(sc.validated().is_err(), "{sc:?}");
        }
    }

    #[test]
    fn test_pull_back_places_no_order_on_the_two_degrees() {
        // Unlike the fibered powers, a preimage bound accepts constraint
        // degree above the map degree.
        let sc = MapScenario::PullBack { k: 2, m: 1, d: 2, d_set: 7, s: 3 };
        assert!(sc.validated().is_ok());
    }

    #[test]
    fn test_subspace_family_dimension_formula() {
        for (k, m) in [(1, 2), (2, 5), (3, 9), (4, 14)] {
            assert_eq!(transversal_ambient_dim(k), m);
        }
        for k in 1..=10 {
            assert_eq!(transversal_ambient_dim(k), (k + 1) * (k + 2) / 2 - 1);
        }
    }

    #[test]
    fn test_scenario_catalog_ids_are_stable() {
        let ids: Vec<&str> = scenario_catalog().iter().map(|e| e.id).collect();
        assert_eq!(ids, ["pull-back", "image", "fourier-mukai", "transversal"]);
    }
}
