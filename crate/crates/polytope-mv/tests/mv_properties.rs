//! Cross-route properties of the mixed-volume engine: symmetry, linearity,
//! monotonicity, the identical-bodies/volume identity, agreement between the
//! closed-form strategies and the finite-difference oracle, and the
//! assignment-count relation on boxes.

use combinat_core::{factorial, IntMatrix, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use polytope_mv::{
    mixed_volume, mixed_volume_oracle_interpolation, n_refined, MixedVolumeQuery, Polytope,
};
use proptest::prelude::*;

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Slot owners + a body pool → a query with positive multiplicities summing
/// to the ambient dimension.
fn query_from_owners(owners: &[usize], pool: &[Polytope]) -> MixedVolumeQuery {
    let mut ids: Vec<usize> = owners.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let bodies: Vec<Polytope> = ids.iter().map(|&i| pool[i].clone()).collect();
    let mults: Vec<usize> = ids
        .iter()
        .map(|&i| owners.iter().filter(|&&o| o == i).count())
        .collect();
    MixedVolumeQuery::new(bodies, mults).expect("owners cover ambient dimension")
}

/// Random box queries of order ≤ 5 (bodies may repeat via multiplicities).
fn arb_box_query() -> impl Strategy<Value = MixedVolumeQuery> {
    (1..=5usize)
        .prop_flat_map(|m| {
            (
                prop::collection::vec(0..m, m),
                prop::collection::vec(prop::collection::vec(0..=6u64, m), m),
            )
        })
        .prop_map(|(owners, sides)| {
            let pool: Vec<Polytope> = sides.iter().map(|s| Polytope::axis_box_u64(s)).collect();
            query_from_owners(&owners, &pool)
        })
}

/// Random same-support simplex queries of order ≤ 5.
fn arb_simplex_query() -> impl Strategy<Value = MixedVolumeQuery> {
    (1..=5usize)
        .prop_flat_map(|m| {
            (
                prop::collection::vec(0..m, m),
                prop::collection::vec(1..=6u64, m),
                prop::collection::vec(any::<bool>(), m),
            )
        })
        .prop_map(|(owners, degrees, in_support)| {
            let m = owners.len();
            // Shared support: the selected coordinates, never empty.
            let mut vars: Vec<usize> = (0..m).filter(|&v| in_support[v]).collect();
            if vars.is_empty() {
                vars.push(0);
            }
            let pool: Vec<Polytope> = degrees
                .iter()
                .map(|&d| Polytope::simplex(m, d, &vars).expect("valid support"))
                .collect();
            query_from_owners(&owners, &pool)
        })
}

/// Random same-partition block-product queries of order ≤ 5.
fn arb_block_query() -> impl Strategy<Value = MixedVolumeQuery> {
    (2..=5usize)
        .prop_flat_map(|m| {
            (
                prop::collection::vec(0..m, m),
                // Partition of 0..m into runs; cut after i when cuts[i].
                prop::collection::vec(any::<bool>(), m - 1),
                prop::collection::vec(prop::collection::vec(1..=5u64, m), m),
            )
        })
        .prop_map(|(owners, cuts, degrees)| {
            let m = owners.len();
            let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
            for v in 1..m {
                if cuts[v - 1] {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().expect("nonempty").push(v);
            }
            let pool: Vec<Polytope> = degrees
                .iter()
                .map(|ds| {
                    let spec: Vec<(Vec<usize>, u64)> = blocks
                        .iter()
                        .enumerate()
                        .map(|(b, vars)| (vars.clone(), ds[b]))
                        .collect();
                    Polytope::block_product(m, &spec).expect("disjoint blocks")
                })
                .collect();
            query_from_owners(&owners, &pool)
        })
}

proptest! {
    /// Mixed volume does not depend on the order of the body list.
    #[test]
    fn prop_mv_symmetric_under_permutation(
        q in arb_box_query(),
        seed in 0..6usize,
    ) {
        let n = q.bodies().len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left(seed % n);
        if seed % 2 == 1 {
            perm.reverse();
        }
        let bodies: Vec<Polytope> = perm.iter().map(|&i| q.bodies()[i].clone()).collect();
        let mults: Vec<usize> = perm.iter().map(|&i| q.multiplicities()[i]).collect();
        let shuffled = MixedVolumeQuery::new(bodies, mults).expect("same totals");
        prop_assert_eq!(mixed_volume(&q).unwrap(), mixed_volume(&shuffled).unwrap());
    }

    /// MV(B₁,…,aK′+bK″) = a·MV(…,K′) + b·MV(…,K″) on boxes.
    #[test]
    fn prop_mv_linear_in_each_argument(
        fixed in prop::collection::vec(prop::collection::vec(0..=5u64, 3), 2),
        kp in prop::collection::vec(0..=5u64, 3),
        kpp in prop::collection::vec(0..=5u64, 3),
        a in 0..=3u64,
        b in 0..=3u64,
    ) {
        let base: Vec<Polytope> = fixed.iter().map(|s| Polytope::axis_box_u64(s)).collect();
        let kp = Polytope::axis_box_u64(&kp);
        let kpp = Polytope::axis_box_u64(&kpp);
        let combo = Polytope::minkowski_sum(vec![
            kp.scale(&BigInt::from(a)),
            kpp.scale(&BigInt::from(b)),
        ])
        .unwrap();

        let with = |last: Polytope| {
            let mut bodies = base.clone();
            bodies.push(last);
            mixed_volume(&MixedVolumeQuery::of_bodies(bodies).unwrap()).unwrap()
        };
        prop_assert_eq!(
            with(combo),
            int(a) * with(kp.clone()) + int(b) * with(kpp.clone())
        );
    }

    /// Componentwise-nested boxes give monotone mixed volumes.
    #[test]
    fn prop_mv_monotone_on_nested_boxes(
        inner in prop::collection::vec(prop::collection::vec(0..=4u64, 4), 4),
        pad in prop::collection::vec(prop::collection::vec(0..=3u64, 4), 4),
    ) {
        let small: Vec<Polytope> = inner.iter().map(|s| Polytope::axis_box_u64(s)).collect();
        let large: Vec<Polytope> = inner
            .iter()
            .zip(&pad)
            .map(|(s, p)| {
                let sides: Vec<u64> = s.iter().zip(p).map(|(&x, &y)| x + y).collect();
                Polytope::axis_box_u64(&sides)
            })
            .collect();
        let mv_small = mixed_volume(&MixedVolumeQuery::of_bodies(small).unwrap()).unwrap();
        let mv_large = mixed_volume(&MixedVolumeQuery::of_bodies(large).unwrap()).unwrap();
        prop_assert!(mv_small <= mv_large);
    }

    /// A query repeating one body m times evaluates to that body's volume.
    #[test]
    fn prop_identical_bodies_give_volume(
        which in 0..3usize,
        m in 1..=5usize,
        sides in prop::collection::vec(1..=6u64, 5),
        degree in 1..=6u64,
    ) {
        let body = match which {
            0 => Polytope::axis_box_u64(&sides[..m]),
            1 => Polytope::full_simplex(m, degree),
            _ => {
                let half = m / 2;
                let blocks: Vec<(Vec<usize>, u64)> = if half >= 1 && m - half >= 1 {
                    vec![((0..half).collect(), degree), ((half..m).collect(), sides[0])]
                } else {
                    vec![((0..m).collect(), degree)]
                };
                Polytope::block_product(m, &blocks).unwrap()
            }
        };
        let q = MixedVolumeQuery::new(vec![body.clone()], vec![m]).unwrap();
        prop_assert_eq!(mixed_volume(&q).unwrap(), body.volume().unwrap());
    }

    /// The closed-form strategies and the finite-difference oracle agree
    /// exactly on every supported family.
    #[test]
    fn prop_mv_routes_agree_on_boxes(q in arb_box_query()) {
        prop_assert_eq!(
            mixed_volume(&q).unwrap(),
            mixed_volume_oracle_interpolation(&q).unwrap()
        );
    }

    #[test]
    fn prop_mv_routes_agree_on_simplices(q in arb_simplex_query()) {
        prop_assert_eq!(
            mixed_volume(&q).unwrap(),
            mixed_volume_oracle_interpolation(&q).unwrap()
        );
    }

    #[test]
    fn prop_mv_routes_agree_on_block_products(q in arb_block_query()) {
        prop_assert_eq!(
            mixed_volume(&q).unwrap(),
            mixed_volume_oracle_interpolation(&q).unwrap()
        );
    }

    /// n_refined · Πα_i! = k! · MV(boxes with the matrix rows as sides).
    #[test]
    fn prop_refined_count_matches_mixed_volume(
        l in 1..=3usize,
        extra in prop::collection::vec(0..3usize, 3),
        entries in prop::collection::vec(0..=6u64, 18),
    ) {
        let mut alpha = vec![1u64; l];
        for &e in &extra {
            alpha[e % l] += 1;
        }
        let k: u64 = alpha.iter().sum();
        let rows: Vec<Vec<u64>> = (0..l)
            .map(|i| (0..k as usize).map(|j| entries[(i * 6 + j) % entries.len()]).collect())
            .collect();
        let d = IntMatrix::from_rows(&rows);
        let n = n_refined(&d, &IntVector::from_u64s(&alpha)).unwrap();

        let bodies: Vec<Polytope> = rows.iter().map(|r| Polytope::axis_box_u64(r)).collect();
        let mults: Vec<usize> = alpha.iter().map(|&a| a as usize).collect();
        let mv = mixed_volume(&MixedVolumeQuery::new(bodies, mults).unwrap()).unwrap();

        let alpha_fact: BigInt = alpha.iter().map(|&a| factorial(a as usize)).product();
        prop_assert_eq!(
            BigRational::from_integer(n * alpha_fact),
            mv * BigRational::from_integer(factorial(k as usize))
        );
    }
}

#[test]
fn test_spec_pinned_examples() {
    // m unit cubes → 1.
    let q = MixedVolumeQuery::new(vec![Polytope::axis_box_u64(&[1, 1, 1, 1])], vec![4]).unwrap();
    assert_eq!(mixed_volume(&q).unwrap(), int(1));

    // Cubes of sides d_i with multiplicities α_i → Π d_i^{α_i}.
    let q = MixedVolumeQuery::new(
        vec![
            Polytope::axis_box_u64(&[2, 2, 2]),
            Polytope::axis_box_u64(&[3, 3, 3]),
        ],
        vec![2, 1],
    )
    .unwrap();
    assert_eq!(mixed_volume(&q).unwrap(), int(12));
    assert_eq!(mixed_volume_oracle_interpolation(&q).unwrap(), int(12));

    // Axis segments → a₁⋯a_m/m!.
    let q = MixedVolumeQuery::of_bodies(vec![
        Polytope::axis_box_u64(&[3, 0]),
        Polytope::axis_box_u64(&[0, 4]),
    ])
    .unwrap();
    assert_eq!(
        mixed_volume(&q).unwrap(),
        BigRational::new(BigInt::from(12), BigInt::from(2))
    );
}

#[test]
fn test_oracle_equals_closed_form_on_mixed_multiplicities() {
    // Exhaustive small sweep: boxes in dimension 3, multiplicities (2,1).
    for a in 0..3u64 {
        for b in 1..4u64 {
            for c in 0..3u64 {
                let q = MixedVolumeQuery::new(
                    vec![
                        Polytope::axis_box_u64(&[a, b, c]),
                        Polytope::axis_box_u64(&[c + 1, a + 2, b]),
                    ],
                    vec![2, 1],
                )
                .unwrap();
                assert_eq!(
                    mixed_volume(&q).unwrap(),
                    mixed_volume_oracle_interpolation(&q).unwrap()
                );
            }
        }
    }
}
