//! Cross-checks of the map-scenario evaluators against term-by-term
//! reconstructions of their defining sums, built directly on the block
//! variety bound.

use bound_catalog::block_variety_bound;
use combinat_core::{binomial, ExactScalar, IntVector};
use map_bounds::{
    fourier_mukai_bound, image_bound, pull_back_bound, transversal_ambient_dim,
    transversal_bound, MapScenario,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn blocks_of(k: usize, m: usize, copies: usize) -> IntVector {
    let sizes: Vec<u64> = std::iter::repeat_n(k as u64, copies)
        .chain(std::iter::once(m as u64))
        .collect();
    IntVector::from_u64s(&sizes)
}

fn degrees_of(d: u64, d_set: u64, copies: usize) -> IntVector {
    let degrees: Vec<u64> = std::iter::repeat_n(d, copies)
        .chain(std::iter::once(d_set))
        .collect();
    IntVector::from_u64s(&degrees)
}

/// `Σ_{h=0}^{span} Σ_{ℓ=1}^{span−h} C(count+1, ℓ) 6^ℓ V(ℓ)`, recomputed
/// term by term from the variety bound alone.
fn literal_double_sum(
    degrees: &IntVector,
    blocks: &IntVector,
    count: u64,
    span: usize,
) -> ExactScalar {
    let mut total = BigRational::zero();
    for h in 0..=span {
        for ell in 1..=(span - h) {
            let choose = binomial(count as i64 + 1, ell as i64);
            if choose.is_zero() {
                continue;
            }
            total += BigRational::from(choose * BigInt::from(6u32).pow(ell as u32))
                * block_variety_bound(degrees, blocks, ell).unwrap().value;
        }
    }
    total
}

/// The same double sum with the position index summed out: subset size `ℓ`
/// appears once for each `h <= span − ℓ`, i.e. `span − ℓ + 1` times.
fn collapsed_double_sum(
    degrees: &IntVector,
    blocks: &IntVector,
    count: u64,
    span: usize,
) -> ExactScalar {
    let mut total = BigRational::zero();
    for ell in 1..=span {
        let choose = binomial(count as i64 + 1, ell as i64);
        if choose.is_zero() {
            continue;
        }
        total += BigRational::from(
            BigInt::from((span - ell + 1) as u64)
                * choose
                * BigInt::from(6u32).pow(ell as u32),
        ) * block_variety_bound(degrees, blocks, ell).unwrap().value;
    }
    total
}

#[test]
fn test_pull_back_matches_the_literal_double_sum() {
    for k in 1..=2usize {
        for m in 1..=2usize {
            for (d, d_set) in [(2u64, 2u64), (3, 2), (2, 5)] {
                for s in [0u64, 2] {
                    let sc = MapScenario::PullBack { k, m, d, d_set, s };
                    let got = pull_back_bound(&sc).unwrap().value;
                    let expected = literal_double_sum(
                        &degrees_of(d, d_set, 1),
                        &blocks_of(k, m, 1),
                        m as u64 + s,
                        k + m,
                    );
                    assert_eq!(got, expected, "k={k} m={m} d={d} d_set={d_set} s={s}");
                }
            }
        }
    }
}

#[test]
fn test_image_matches_the_literal_sum_over_fibered_powers() {
    for (k, m) in [(1usize, 1usize), (2, 1), (1, 2)] {
        for s in [0u64, 1] {
            for i in 0..=m.min(1) {
                let sc = MapScenario::Image { k, m, d: 3, d_set: 2, s, i };
                let got = image_bound(&sc).unwrap().value;
                let mut expected = BigRational::zero();
                for j in 0..=i {
                    let copies = j + 1;
                    expected += literal_double_sum(
                        &degrees_of(3, 2, copies),
                        &blocks_of(k, m, copies),
                        copies as u64 * (m as u64 + s),
                        copies * k + m,
                    );
                }
                assert_eq!(got, expected, "k={k} m={m} s={s} i={i}");
            }
        }
    }
}

#[test]
fn test_fourier_mukai_matches_both_reconstructions() {
    for (k, m) in [(1usize, 1usize), (2, 1), (1, 2)] {
        for (s1, s2) in [(0u64, 1u64), (2, 2)] {
            for i in 0..=m.min(1) {
                let sc = MapScenario::FourierMukai { k, m, d: 3, d_set: 2, s1, s2, i };
                let got = fourier_mukai_bound(&sc).unwrap().value;
                let mut literal = BigRational::zero();
                let mut collapsed = BigRational::zero();
                for j in 0..=i {
                    let copies = j + 1;
                    let span = copies * (k + m) + k;
                    let count = copies as u64 * (s1 + s2);
                    let degrees = degrees_of(3, 2, copies);
                    let blocks = blocks_of(k, m, copies);
                    literal += literal_double_sum(&degrees, &blocks, count, span);
                    collapsed += collapsed_double_sum(&degrees, &blocks, count, span);
                }
                assert_eq!(got, literal, "literal: k={k} m={m} s1={s1} s2={s2} i={i}");
                assert_eq!(got, collapsed, "collapsed: k={k} m={m} s1={s1} s2={s2} i={i}");
            }
        }
    }
}

#[test]
fn test_transversal_matches_the_literal_sum_and_pins_the_smallest_case() {
    // k = 2 models the subspace family in m = 5 matrix coordinates with
    // 2(k+1) = 6 incidence equations, so s = 1 gives 1 + 5 + 6 = 12
    // polynomials on blocks (2, 5) with degrees (d, 2).
    let sc = MapScenario::Transversal { k: 2, k_prime: 1, d: 2, s: 1, i: 0 };
    let got = transversal_bound(&sc).unwrap();
    let m = transversal_ambient_dim(2);
    assert_eq!(m, 5);
    let expected = literal_double_sum(&degrees_of(2, 2, 1), &blocks_of(2, m, 1), 12, 2 + m);
    assert_eq!(got.value, expected);
    // Frozen value; note it is a genuine non-integer rational.
    assert_eq!(
        got.value,
        "154138701479889324675282/7".parse::<BigRational>().unwrap()
    );

    // A second ambient dimension, with one honest fibered power.
    let sc = MapScenario::Transversal { k: 1, k_prime: 0, d: 3, s: 2, i: 1 };
    let got = transversal_bound(&sc).unwrap().value;
    let m = transversal_ambient_dim(1);
    let mut expected = BigRational::zero();
    for j in 0..=1usize {
        let copies = j + 1;
        let count = copies as u64 * (2 + m as u64 + 4);
        expected += literal_double_sum(
            &degrees_of(3, 2, copies),
            &blocks_of(1, m, copies),
            count,
            copies + m,
        );
    }
    assert_eq!(got, expected);
}

#[test]
fn test_index_sums_strictly_accumulate() {
    let mut previous = BigRational::zero();
    for i in 0..=2usize {
        let v = image_bound(&MapScenario::Image { k: 1, m: 2, d: 3, d_set: 2, s: 1, i })
            .unwrap()
            .value;
        assert!(v > previous, "image i={i}");
        previous = v;
    }
    let mut previous = BigRational::zero();
    for i in 0..=2usize {
        let v = fourier_mukai_bound(&MapScenario::FourierMukai {
            k: 1,
            m: 2,
            d: 3,
            d_set: 2,
            s1: 1,
            s2: 1,
            i,
        })
        .unwrap()
        .value;
        assert!(v > previous, "two-factor projection i={i}");
        previous = v;
    }
}

#[test]
fn test_pull_back_is_asymmetric_in_the_two_factors() {
    // Swapping (k, d) with (m, d_set) changes both the block shapes and the
    // polynomial count m + s; the two orientations bound different sets and
    // their values differ.
    let forward = pull_back_bound(&MapScenario::PullBack { k: 1, m: 2, d: 2, d_set: 4, s: 1 })
        .unwrap()
        .value;
    let swapped = pull_back_bound(&MapScenario::PullBack { k: 2, m: 1, d: 4, d_set: 2, s: 1 })
        .unwrap()
        .value;
    assert_ne!(forward, swapped);
}
