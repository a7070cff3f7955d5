//! Bounds for varieties and sign-condition sets cut out by polynomials in
//! blocks of variables, driven by one rational per-subset term shared by
//! the whole family.

use crate::error::BoundError;
use crate::result::BoundResult;
use crate::total_degree::{round_up_even, sign_flip};
use combinat_core::{binomial, multinomial, ExactScalar, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn checked_block_shape(d: &IntVector, blocks: &IntVector) -> Result<(usize, usize), BoundError> {
    let p = blocks.len();
    if p == 0 || d.len() != p {
        return Err(BoundError::hypothesis(format!(
            "need one degree per nonempty block; got {} degrees for {} blocks",
            d.len(),
            p
        )));
    }
    if blocks.iter().any(|b| *b < BigInt::one()) {
        return Err(BoundError::hypothesis(
            "every block must contain at least one variable".to_string(),
        ));
    }
    let k: BigInt = blocks.sum();
    let k = usize::try_from(&k)
        .map_err(|_| BoundError::hypothesis("total variable count does not fit in usize"))?;
    Ok((p, k))
}

fn require_degrees_at_least_two(d: &IntVector) -> Result<(), BoundError> {
    if d.iter().any(|x| *x < BigInt::from(2)) {
        return Err(BoundError::hypothesis(format!(
            "every block degree must be >= 2; got {:?}",
            d.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    Ok(())
}

fn rounded_up(d: &IntVector) -> IntVector {
    let evened: Vec<BigInt> = d
        .iter()
        .map(|x| {
            let u = u64::try_from(x).expect("degrees validated nonnegative and small");
            BigInt::from(round_up_even(u))
        })
        .collect();
    IntVector::new(evened).expect("same length as a validated vector")
}

fn doubled(d: &IntVector) -> IntVector {
    IntVector::new(d.iter().map(|x| x * BigInt::from(2)).collect())
        .expect("same length as a validated vector")
}

/// The rational per-subset term of the block family: for `p` blocks of
/// sizes `k_i` with degrees `d_i` and `k = Σ k_i`,
/// `1 + (−1)^{k−j+1} + (k−j+2)² C(k,j−1) · (Π k_i!/k!) ·
///  (1+p)^{3k−j+1} / (p(p+2)) · Π d_i^{k_i}`.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `j ≥ 1`, the shapes agree, and every
/// block is nonempty.
pub fn block_generic_term(
    d: &IntVector,
    blocks: &IntVector,
    j: usize,
) -> Result<ExactScalar, BoundError> {
    let (p, k) = checked_block_shape(d, blocks)?;
    if j < 1 || j > 3 * k + 1 {
        return Err(BoundError::hypothesis(format!(
            "subset size must satisfy 1 <= j <= 3k+1; got j = {j}, k = {k}"
        )));
    }
    let parts: Vec<i64> = blocks
        .iter()
        .map(|b| i64::try_from(b).expect("block sizes validated small"))
        .collect();
    let weight = multinomial(k as i64, &parts).expect("parts sum to k by construction");

    let mut degree_product = BigInt::one();
    for (deg, size) in d.iter().zip(blocks.iter()) {
        let size = u32::try_from(size).expect("block sizes validated small");
        degree_product *= deg.pow(size);
    }

    let square = BigInt::from(k as i64 - j as i64 + 2).pow(2);
    let numerator = square
        * binomial(k as i64, j as i64 - 1)
        * BigInt::from(p as u64 + 1).pow((3 * k + 1 - j) as u32)
        * degree_product;
    let denominator = weight * BigInt::from(p as u64) * BigInt::from(p as u64 + 2);

    Ok(BigRational::from(BigInt::one() + sign_flip(k, j))
        + BigRational::new(numerator, denominator))
}

/// Shared interior of the variety bound: the alternating-sum arm over
/// rounded-up degrees against half the doubled-degree term.
fn block_variety_arms(
    d: &IntVector,
    blocks: &IntVector,
    ell: usize,
    k: usize,
) -> Result<(ExactScalar, ExactScalar), BoundError> {
    let d_even = rounded_up(d);
    let mut sum_arm = BigRational::from(BigInt::from(3));
    for j in 1..=k {
        let choose = binomial(ell as i64, j as i64);
        if choose == BigInt::zero() {
            continue;
        }
        let weight = BigRational::from(choose * BigInt::from(2u32).pow(j as u32));
        sum_arm += weight
            * (block_generic_term(&d_even, blocks, j)? + block_generic_term(&d_even, blocks, j + 1)?);
    }
    let half_arm = block_generic_term(&doubled(d), blocks, 1)?
        / BigRational::from(BigInt::from(2));
    Ok((sum_arm, half_arm))
}

/// Upper bound on the total Betti numbers of a variety cut out by `ell`
/// polynomials whose degrees respect the block structure: the minimum of
/// the alternating-sum arm (rounded-up even degrees) and half the single
/// doubled-degree term. Ties report the first arm.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `ell ≥ 1`, shapes agree, and every
/// block degree is ≥ 2.
pub fn block_variety_bound(
    d: &IntVector,
    blocks: &IntVector,
    ell: usize,
) -> Result<BoundResult, BoundError> {
    let (_, k) = checked_block_shape(d, blocks)?;
    require_degrees_at_least_two(d)?;
    if ell < 1 {
        return Err(BoundError::hypothesis(format!(
            "need at least one defining polynomial; got ell = {ell}"
        )));
    }
    let (sum_arm, half_arm) = block_variety_arms(d, blocks, ell, k)?;
    let (value, branch) = if sum_arm <= half_arm {
        (sum_arm, "alternating-sum")
    } else {
        (half_arm, "doubled-degree")
    };
    Ok(BoundResult::checked(
        value,
        "multi-degree-blocks",
        vec![
            "every block degree >= 2".to_string(),
            format!("ell = {ell} >= 1"),
        ],
        Some(branch.to_string()),
        false,
    ))
}

/// Sign-condition wrappers around [`block_variety_bound`]: with
/// `i = Some(i)` the bound on the `i`-th Betti numbers summed over the
/// realizable sign conditions of `s` polynomials,
/// `Σ_{j=1}^{k−i} C(s,j) 4^j V(j)`; with `i = None` the closed-set bound
/// `Σ_{i=0}^{k} Σ_{j=1}^{k−i} C(s+1,j) 6^j V(j)`, where `V(j)` is the
/// variety bound for `j` polynomials.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `s ≥ 1`, degrees are ≥ 2, and any
/// given `i` satisfies `i ≤ k−1`.
pub fn block_semi_bounds(
    d: &IntVector,
    blocks: &IntVector,
    s: u64,
    i: Option<usize>,
) -> Result<BoundResult, BoundError> {
    let (_, k) = checked_block_shape(d, blocks)?;
    require_degrees_at_least_two(d)?;
    if s < 1 {
        return Err(BoundError::hypothesis(
            "need at least one sign-condition polynomial".to_string(),
        ));
    }
    // V(j) for j = 1..=k, computed once and reused across the double sum.
    let mut variety = Vec::with_capacity(k);
    for j in 1..=k {
        variety.push(block_variety_bound(d, blocks, j)?.value);
    }
    let mut assumptions = vec![
        "every block degree >= 2".to_string(),
        format!("s = {s} >= 1"),
    ];
    let (value, branch) = match i {
        Some(i) => {
            if i > k - 1 {
                return Err(BoundError::hypothesis(format!(
                    "Betti index must satisfy i <= k-1; got i = {i}, k = {k}"
                )));
            }
            assumptions.push(format!("0 <= i = {i} <= k-1"));
            let mut total = BigRational::zero();
            for j in 1..=(k - i) {
                total += BigRational::from(
                    binomial(s as i64, j as i64) * BigInt::from(4u32).pow(j as u32),
                ) * &variety[j - 1];
            }
            (total, format!("sign-conditions(i={i})"))
        }
        None => {
            let mut total = BigRational::zero();
            for i in 0..=k {
                for j in 1..=(k - i) {
                    total += BigRational::from(
                        binomial(s as i64 + 1, j as i64) * BigInt::from(6u32).pow(j as u32),
                    ) * &variety[j - 1];
                }
            }
            (total, "closed-set".to_string())
        }
    };
    Ok(BoundResult::checked(
        value,
        "multi-degree-blocks",
        assumptions,
        Some(branch),
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(xs: &[u64]) -> IntVector {
        IntVector::from_u64s(xs)
    }

    #[test]
    fn test_single_block_term_closed_form() {
        // p = 1: the multinomial weight is 1 and the term collapses to
        // 1 + (−1)^{k−j+1} + (k−j+2)² C(k,j−1) 2^{3k−j+1} d^k / 3.
        for k in 1..=5usize {
            for j in 1..=k + 1 {
                for d in [2u64, 3, 5] {
                    let got =
                        block_generic_term(&vec_of(&[d]), &vec_of(&[k as u64]), j).unwrap();
                    let direct = BigRational::from(BigInt::one() + sign_flip(k, j))
                        + BigRational::new(
                            BigInt::from(k as i64 - j as i64 + 2).pow(2)
                                * binomial(k as i64, j as i64 - 1)
                                * BigInt::from(2u32).pow((3 * k + 1 - j) as u32)
                                * BigInt::from(d).pow(k as u32),
                            BigInt::from(3),
                        );
                    assert_eq!(got, direct, "k={k} j={j} d={d}");
                }
            }
        }
    }

    #[test]
    fn test_term_rejects_bad_shapes() {
        assert!(block_generic_term(&vec_of(&[2, 3]), &vec_of(&[1]), 1).is_err());
        assert!(block_generic_term(&vec_of(&[2]), &vec_of(&[0]), 1).is_err());
        assert!(block_generic_term(&vec_of(&[2]), &vec_of(&[2]), 0).is_err());
    }

    #[test]
    fn test_variety_bound_records_the_smaller_arm() {
        for d in [2u64, 3, 4] {
            for ell in 1..=3usize {
                let dv = vec_of(&[d, d + 1]);
                let blocks = vec_of(&[2, 1]);
                let r = block_variety_bound(&dv, &blocks, ell).unwrap();
                let (sum_arm, half_arm) = block_variety_arms(&dv, &blocks, ell, 3).unwrap();
                let expect_branch = if sum_arm <= half_arm {
                    "alternating-sum"
                } else {
                    "doubled-degree"
                };
                assert_eq!(r.value, sum_arm.min(half_arm));
                assert_eq!(r.branch.as_deref(), Some(expect_branch), "d={d} ell={ell}");
            }
        }
    }

    #[test]
    fn test_variety_bound_rejects_linear_degrees() {
        assert!(block_variety_bound(&vec_of(&[1, 2]), &vec_of(&[1, 1]), 1).is_err());
    }

    #[test]
    fn test_semi_bounds_single_condition_matches_hand_sum() {
        // s = 1, i = Some(0): Σ_{j=1}^{k} C(1,j) 4^j V(j) = 4·V(1).
        let d = vec_of(&[2, 2]);
        let blocks = vec_of(&[1, 1]);
        let per = block_semi_bounds(&d, &blocks, 1, Some(0)).unwrap();
        let v1 = block_variety_bound(&d, &blocks, 1).unwrap().value;
        assert_eq!(per.value, BigRational::from(BigInt::from(4)) * v1);
    }

    #[test]
    fn test_semi_bounds_closed_dominates_each_index() {
        let d = vec_of(&[2, 3]);
        let blocks = vec_of(&[2, 1]);
        let closed = block_semi_bounds(&d, &blocks, 2, None).unwrap().value;
        for i in 0..=2 {
            let per = block_semi_bounds(&d, &blocks, 2, Some(i)).unwrap().value;
            assert!(per <= closed, "i={i}");
        }
    }

    #[test]
    fn test_semi_bounds_rejects_out_of_range_index() {
        let d = vec_of(&[2]);
        let blocks = vec_of(&[3]);
        assert!(block_semi_bounds(&d, &blocks, 1, Some(3)).is_err());
    }
}
