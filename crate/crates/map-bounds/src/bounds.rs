//! Evaluators for the four map scenarios. Each one substitutes fibered-power
//! block data — block sizes `(k,…,k, m)` and degrees `(d,…,d, d_set)` — into
//! the block-structured closed-set bounds and sums the results.

use crate::scenario::{transversal_ambient_dim, MapScenario};
use bound_catalog::{block_semi_bounds, block_variety_bound, BoundError, BoundResult};
use combinat_core::{binomial, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Block sizes `(k,…,k, m)` with `copies` source factors.
fn fibered_blocks(k: usize, m: usize, copies: usize) -> IntVector {
    let sizes: Vec<u64> = std::iter::repeat_n(k as u64, copies)
        .chain(std::iter::once(m as u64))
        .collect();
    IntVector::from_u64s(&sizes)
}

/// Block degrees `(d,…,d, d_set)` with `copies` source factors.
fn fibered_degrees(d: u64, d_set: u64, copies: usize) -> IntVector {
    let degrees: Vec<u64> = std::iter::repeat_n(d, copies)
        .chain(std::iter::once(d_set))
        .collect();
    IntVector::from_u64s(&degrees)
}

/// Index span of the position/subset double sum for the `j`-th fibered
/// power of a two-factor projection: `(j+1)(k+m) + k`, counting both
/// factors in every copy plus one extra source factor. This exceeds the
/// `(j+1)k + m` variables actually present; the extra indices only add
/// further nonnegative terms, so the result stays an upper bound.
fn fourier_index_span(j: usize, k: usize, m: usize) -> usize {
    (j + 1) * (k + m) + k
}

fn variant_mismatch(expected: &str) -> BoundError {
    BoundError::hypothesis(format!(
        "scenario variant mismatch: this evaluator needs {expected}"
    ))
}

/// Bound on the total Betti numbers of the preimage of a closed constraint
/// set under a polynomial map: the closed-set block bound on blocks
/// `(k, m)` with degrees `(d, d_set)`, where the `m` graph equations and
/// the `s` constraints together give `m + s` polynomials.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless the scenario is a
/// [`MapScenario::PullBack`] with positive dimensions and both degrees
/// `>= 2`.
pub fn pull_back_bound(sc: &MapScenario) -> Result<BoundResult, BoundError> {
    let MapScenario::PullBack { k, m, d, d_set, s } = *sc else {
        return Err(variant_mismatch("PullBack"));
    };
    sc.validated()?;
    let graph_conditions = m as u64 + s;
    let inner = block_semi_bounds(
        &fibered_degrees(d, d_set, 1),
        &fibered_blocks(k, m, 1),
        graph_conditions,
        None,
    )?;
    Ok(BoundResult::checked(
        inner.value,
        "pull-back",
        vec![
            format!("map degree d = {d} and constraint degree d_set = {d_set} are both >= 2"),
            format!("graph equations plus constraints: m + s = {graph_conditions}"),
        ],
        None,
        false,
    ))
}

/// Bound on the `i`-th Betti number of the image of a bounded closed set
/// under a polynomial map: the closed-set block bound summed over the
/// fibered powers `j = 0..=i`, where the `j`-th power lives in `j + 2`
/// blocks `(k,…,k, m)` with degrees `(d,…,d, d_set)` and carries
/// `(j+1)(m+s)` polynomials.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless the scenario is a
/// [`MapScenario::Image`] with positive dimensions, `d >= d_set >= 2`, and
/// `i <= m`.
pub fn image_bound(sc: &MapScenario) -> Result<BoundResult, BoundError> {
    let MapScenario::Image { k, m, d, d_set, s, i } = *sc else {
        return Err(variant_mismatch("Image"));
    };
    sc.validated()?;
    let mut value = BigRational::zero();
    for j in 0..=i {
        let copies = j + 1;
        let conditions = copies as u64 * (m as u64 + s);
        value += block_semi_bounds(
            &fibered_degrees(d, d_set, copies),
            &fibered_blocks(k, m, copies),
            conditions,
            None,
        )?
        .value;
    }
    Ok(BoundResult::checked(
        value,
        "image",
        vec![
            format!("degrees satisfy d = {d} >= d_set = {d_set} >= 2"),
            format!("Betti index i = {i} <= target dimension m = {m}"),
        ],
        None,
        false,
    ))
}

/// Bound on the `i`-th Betti number of the projection to the second factor
/// of `(preimage of S1) ∩ S2`: for each fibered power `j = 0..=i`, sums
/// `C((j+1)(s1+s2)+1, ℓ) · 6^ℓ · V(ℓ)` over positions `h = 0..=α_j` and
/// subset sizes `ℓ = 1..=α_j − h`, where `V(ℓ)` is the variety bound for
/// `ℓ` polynomials on blocks `(k,…,k, m)` with degrees `(d,…,d, d_set)`
/// and `α_j` is [`fourier_index_span`].
///
/// # Errors
/// [`BoundError::Hypothesis`] unless the scenario is a
/// [`MapScenario::FourierMukai`] with positive dimensions,
/// `d >= d_set >= 2`, and `i <= m`.
pub fn fourier_mukai_bound(sc: &MapScenario) -> Result<BoundResult, BoundError> {
    let MapScenario::FourierMukai { k, m, d, d_set, s1, s2, i } = *sc else {
        return Err(variant_mismatch("FourierMukai"));
    };
    sc.validated()?;
    let mut value = BigRational::zero();
    for j in 0..=i {
        let copies = j + 1;
        let span = fourier_index_span(j, k, m);
        let conditions = copies as u64 * (s1 + s2);
        let degrees = fibered_degrees(d, d_set, copies);
        let blocks = fibered_blocks(k, m, copies);
        // The weighted summand depends on the position h only through the
        // range of ℓ, so each weighted variety bound is computed once; a
        // vanishing binomial weight skips the variety evaluation entirely.
        let mut weighted = vec![BigRational::zero()];
        for ell in 1..=span {
            let choose = binomial(conditions as i64 + 1, ell as i64);
            weighted.push(if choose.is_zero() {
                BigRational::zero()
            } else {
                BigRational::from(choose * BigInt::from(6u32).pow(ell as u32))
                    * block_variety_bound(&degrees, &blocks, ell)?.value
            });
        }
        for h in 0..=span {
            for term in weighted.iter().take(span - h + 1).skip(1) {
                value += term;
            }
        }
    }
    Ok(BoundResult::checked(
        value,
        "fourier-mukai",
        vec![
            format!("degrees satisfy d = {d} >= d_set = {d_set} >= 2"),
            format!("Betti index i = {i} <= second-factor dimension m = {m}"),
        ],
        None,
        false,
    ))
}

/// Bound on the `i`-th Betti number of the space of `k_prime`-dimensional
/// affine subspaces of `R^k` meeting a bounded closed set: the closed-set
/// block bound summed over fibered powers `j = 0..=i` with blocks
/// `(k,…,k, m)`, degrees `(d,…,d, 2)`, and `(j+1)(s + m + 2(k+1))`
/// polynomials, where `m = (k+1)(k+2)/2 − 1` is the dimension of the
/// symmetric-matrix model of the subspace family. The value is uniform in
/// `k_prime`, which enters the hypotheses only.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless the scenario is a
/// [`MapScenario::Transversal`] with `k >= 1`, `k_prime <= k`, and
/// `d >= 2`.
pub fn transversal_bound(sc: &MapScenario) -> Result<BoundResult, BoundError> {
    let MapScenario::Transversal { k, k_prime, d, s, i } = *sc else {
        return Err(variant_mismatch("Transversal"));
    };
    sc.validated()?;
    let m = transversal_ambient_dim(k);
    let mut value = BigRational::zero();
    for j in 0..=i {
        let copies = j + 1;
        let conditions = copies as u64 * (s + m as u64 + 2 * (k as u64 + 1));
        value += block_semi_bounds(
            &fibered_degrees(d, 2, copies),
            &fibered_blocks(k, m, copies),
            conditions,
            None,
        )?
        .value;
    }
    Ok(BoundResult::checked(
        value,
        "transversal",
        vec![
            format!("subspace dimension k' = {k_prime} <= ambient dimension k = {k}"),
            format!("symmetric-matrix model dimension m = {m}, cut out by quadrics"),
            format!("constraint degree d = {d} >= 2"),
        ],
        None,
        false,
    ))
}

/// Routes a scenario to the evaluator for its variant.
///
/// # Errors
/// Whatever the routed evaluator reports.
pub fn scenario_bound(sc: &MapScenario) -> Result<BoundResult, BoundError> {
    match sc {
        MapScenario::PullBack { .. } => pull_back_bound(sc),
        MapScenario::Image { .. } => image_bound(sc),
        MapScenario::FourierMukai { .. } => fourier_mukai_bound(sc),
        MapScenario::Transversal { .. } => transversal_bound(sc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_fibered_shapes() {
        // Second fibered power of a map R^3 -> R^2: three source copies and
        // the target, eleven variables in total.
        let blocks = fibered_blocks(3, 2, 3);
        assert_eq!(blocks.len(), 4);
        assert_eq!(usize::try_from(&blocks.sum()).unwrap(), 11);
        let degrees = fibered_degrees(5, 2, 3);
        assert_eq!(
            degrees.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["5", "5", "5", "2"]
        );
    }

    #[test]
    fn test_fourier_index_span_exceeds_the_fibered_power_dimension() {
        // (j, k, m) = (1, 2, 3): span 2·(2+3)+2 = 12 against 2·2+3 = 7
        // actual variables.
        assert_eq!(fourier_index_span(1, 2, 3), 12);
        assert!(fourier_index_span(1, 2, 3) > 2 * 2 + 3);
        assert_eq!(fourier_index_span(0, 1, 1), 3);
    }

    #[test]
    fn test_pull_back_smallest_scenario_pin() {
        // k = m = 1, d = d_set = 2, s = 0: both variety bounds on blocks
        // (1,1) with degrees (2,2) equal 6563/2, and the closed-set sum is
        // (12 + 12 + 36) · 6563/2 = 196890.
        let sc = MapScenario::PullBack { k: 1, m: 1, d: 2, d_set: 2, s: 0 };
        let r = pull_back_bound(&sc).unwrap();
        assert_eq!(r.value, BigRational::from(BigInt::from(196890)));
        assert_eq!(r.citation, "pull-back");
        assert!(!r.exact);
        assert!(r.branch.is_none());
    }

    #[test]
    fn test_image_at_index_zero_collapses_to_the_pull_back() {
        for (k, m, d, d_set, s) in [(1, 1, 2, 2, 0), (2, 1, 3, 2, 2), (1, 2, 4, 3, 1)] {
            let image = image_bound(&MapScenario::Image { k, m, d, d_set, s, i: 0 }).unwrap();
            let pulled =
                pull_back_bound(&MapScenario::PullBack { k, m, d, d_set, s }).unwrap();
            assert_eq!(image.value, pulled.value, "k={k} m={m} d={d}");
        }
        // And the pinned instance in particular.
        let image = image_bound(&MapScenario::Image {
            k: 1,
            m: 1,
            d: 2,
            d_set: 2,
            s: 0,
            i: 0,
        })
        .unwrap();
        assert_eq!(image.value, BigRational::from(BigInt::from(196890)));
    }

    #[test]
    fn test_fourier_mukai_without_conditions_keeps_single_subsets() {
        // s1 = s2 = 0 leaves the weight C(1, ℓ), so only ℓ = 1 survives and
        // the j-th summand is span_j · 6 · V_j(1).
        let sc = MapScenario::FourierMukai {
            k: 1,
            m: 1,
            d: 2,
            d_set: 2,
            s1: 0,
            s2: 0,
            i: 1,
        };
        let got = fourier_mukai_bound(&sc).unwrap().value;
        let mut expected = BigRational::zero();
        for j in 0..=1usize {
            let copies = j + 1;
            let span = fourier_index_span(j, 1, 1);
            let v1 = block_variety_bound(
                &fibered_degrees(2, 2, copies),
                &fibered_blocks(1, 1, copies),
                1,
            )
            .unwrap()
            .value;
            expected += BigRational::from(BigInt::from(6 * span as i64)) * v1;
        }
        assert_eq!(got, expected);
        // The i = 0 part alone: span 3, V(1) = 6563/2, value 9 · 6563.
        let first = fourier_mukai_bound(&MapScenario::FourierMukai {
            k: 1,
            m: 1,
            d: 2,
            d_set: 2,
            s1: 0,
            s2: 0,
            i: 0,
        })
        .unwrap();
        assert_eq!(first.value, BigRational::from(BigInt::from(59067)));
    }

    #[test]
    fn test_each_evaluator_rejects_other_variants() {
        let pull = MapScenario::PullBack { k: 1, m: 1, d: 2, d_set: 2, s: 0 };
        let image = MapScenario::Image { k: 1, m: 1, d: 2, d_set: 2, s: 0, i: 0 };
        assert!(pull_back_bound(&image).is_err());
        assert!(image_bound(&pull).is_err());
        assert!(fourier_mukai_bound(&pull).is_err());
        assert!(transversal_bound(&pull).is_err());
    }

    #[test]
    fn test_dispatcher_routes_by_variant() {
        let scenarios = [
            (MapScenario::PullBack { k: 1, m: 1, d: 2, d_set: 2, s: 1 }, "pull-back"),
            (MapScenario::Image { k: 1, m: 1, d: 2, d_set: 2, s: 1, i: 1 }, "image"),
            (
                MapScenario::FourierMukai {
                    k: 1,
                    m: 1,
                    d: 2,
                    d_set: 2,
                    s1: 1,
                    s2: 0,
                    i: 0,
                },
                "fourier-mukai",
            ),
            (MapScenario::Transversal { k: 1, k_prime: 1, d: 2, s: 1, i: 0 }, "transversal"),
        ];
        for (sc, citation) in scenarios {
            let r = scenario_bound(&sc).unwrap();
            assert_eq!(r.citation, citation, "{sc:?}");
            assert!(!r.exact);
        }
    }
}
