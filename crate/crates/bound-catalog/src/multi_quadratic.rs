//! Bounds for sets defined by polynomials with an individual degree per
//! variable in the first block and quadratic behavior in the second:
//! the per-subset term, the variety bound, and sign-condition wrappers.

use crate::error::BoundError;
use crate::result::BoundResult;
use crate::total_degree::{round_up_even, sign_flip};
use combinat_core::{binomial, factorial, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn degree_product(d: &IntVector) -> BigInt {
    d.iter().fold(BigInt::one(), |acc, x| acc * x)
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

fn require_degrees_at_least_two(d: &IntVector) -> Result<(), BoundError> {
    if d.iter().any(|x| *x < BigInt::from(2)) {
        return Err(BoundError::hypothesis(format!(
            "every per-variable degree must be >= 2; got {:?}",
            d.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    Ok(())
}

/// The per-subset term of the multi-degree quadratic family: for `k₁`
/// variables with individual degrees `d = (d₁,…,d_{k₁})` and `k₂`
/// quadratic variables, with `k = k₁+k₂`,
/// `2 + (−1)^{k−j+1} + j·2^j·k₁!·k^{j−1}·(2k+1)^{k₁}·d₁⋯d_{k₁}`.
/// An empty degree vector (`k₁ = 0`) is allowed; the product is then 1.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `j ≥ 1` and `k ≥ 1`.
pub fn multi_quadratic_term(
    d: &IntVector,
    k2: usize,
    j: usize,
) -> Result<BigInt, BoundError> {
    let k1 = d.len();
    let k = k1 + k2;
    if j < 1 || k < 1 {
        return Err(BoundError::hypothesis(format!(
            "need j >= 1 and k1 + k2 >= 1; got j = {j}, k1 = {k1}, k2 = {k2}"
        )));
    }
    Ok(BigInt::from(2)
        + sign_flip(k, j)
        + BigInt::from(j as u64)
            * BigInt::from(2u32).pow(j as u32)
            * factorial(k1)
            * BigInt::from(k as u64).pow((j - 1) as u32)
            * BigInt::from(2 * k as u64 + 1).pow(k1 as u32)
            * degree_product(d))
}

fn multi_variety_value(d: &IntVector, k2: usize, ell: usize) -> Result<BigInt, BoundError> {
    require_degrees_at_least_two(d)?;
    if ell < 1 {
        return Err(BoundError::hypothesis(format!(
            "need at least one defining polynomial; got ell = {ell}"
        )));
    }
    let k = d.len() + k2;
    if k < 1 {
        return Err(BoundError::hypothesis("need k1 + k2 >= 1".to_string()));
    }
    let d_even = rounded_up(d);
    let mut value = BigInt::from(3);
    for j in 1..=k {
        let choose = binomial(ell as i64, j as i64);
        if choose == BigInt::zero() {
            continue;
        }
        value += choose
            * BigInt::from(2u32).pow(j as u32)
            * (multi_quadratic_term(&d_even, k2, j)? + multi_quadratic_term(&d_even, k2, j + 1)?);
    }
    Ok(value)
}

/// Upper bound on the total Betti numbers of a variety cut out by `ell`
/// polynomials with per-variable degrees `d` in the first block and
/// quadratic behavior in the remaining `k₂` variables:
/// `3 + Σ_{j=1}^{k} C(ℓ,j) 2^j (T(d′,j) + T(d′,j+1))` with the entries of
/// `d′` rounded up to even.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless every degree is ≥ 2, `ell ≥ 1`, and
/// `k₁+k₂ ≥ 1`. (An empty degree vector needs `k₂ ≥ 1`.)
pub fn multi_quadratic_variety_bound(
    d: &IntVector,
    k2: usize,
    ell: usize,
) -> Result<BoundResult, BoundError> {
    let value = multi_variety_value(d, k2, ell)?;
    Ok(BoundResult::checked(
        BigRational::from(value),
        "multi-partially-quadratic",
        vec![
            "every per-variable degree >= 2".to_string(),
            format!("ell = {ell} >= 1"),
            "the defining polynomials are quadratic outside the first block".to_string(),
        ],
        None,
        true,
    ))
}

/// Sign-condition wrappers around the multi-degree quadratic variety
/// bound: per-index `Σ_{j=1}^{k−i} C(s,j) 4^j V(j)` (with `i = Some(i)`)
/// or closed-set `Σ_{i=0}^{k} Σ_{j=1}^{k−i} C(s+1,j) 6^j V(j)` (with
/// `i = None`).
///
/// # Errors
/// [`BoundError::Hypothesis`] unless degrees are ≥ 2, `s ≥ 1`, and any
/// given `i` satisfies `i ≤ k−1`.
pub fn multi_quadratic_semi_bounds(
    d: &IntVector,
    k2: usize,
    s: u64,
    i: Option<usize>,
) -> Result<BoundResult, BoundError> {
    if s < 1 {
        return Err(BoundError::hypothesis(
            "need at least one sign-condition polynomial".to_string(),
        ));
    }
    let k = d.len() + k2;
    let mut variety = Vec::with_capacity(k);
    for j in 1..=k {
        variety.push(multi_variety_value(d, k2, j)?);
    }
    let mut assumptions = vec![
        "every per-variable degree >= 2".to_string(),
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
            let mut total = BigInt::zero();
            for j in 1..=(k - i) {
                total += binomial(s as i64, j as i64)
                    * BigInt::from(4u32).pow(j as u32)
                    * &variety[j - 1];
            }
            (total, format!("sign-conditions(i={i})"))
        }
        None => {
            let mut total = BigInt::zero();
            for i in 0..=k {
                for j in 1..=(k - i) {
                    total += binomial(s as i64 + 1, j as i64)
                        * BigInt::from(6u32).pow(j as u32)
                        * &variety[j - 1];
                }
            }
            (total, "closed-set".to_string())
        }
    };
    Ok(BoundResult::checked(
        BigRational::from(value),
        "multi-partially-quadratic",
        assumptions,
        Some(branch),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::mixed_quadratic_term;

    fn vec_of(xs: &[u64]) -> IntVector {
        IntVector::from_u64s(xs)
    }

    #[test]
    fn test_empty_first_block_matches_mixed_term_for_any_degree() {
        // k1 = 0 removes every degree-dependent factor, so the term agrees
        // with the mixed quadratic term regardless of its degree argument.
        let empty = vec_of(&[]);
        for k2 in 1..=5usize {
            for j in 1..=k2 + 1 {
                let ours = multi_quadratic_term(&empty, k2, j).unwrap();
                for d in [2u64, 5, 9] {
                    assert_eq!(
                        ours,
                        mixed_quadratic_term(d, 0, k2, j).unwrap(),
                        "k2={k2} j={j} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn test_term_pinned_value() {
        // d=(2), k2=2, j=1: k=3, so 2 − 1 + 1·2·1!·3⁰·7¹·2 = 29.
        assert_eq!(
            multi_quadratic_term(&vec_of(&[2]), 2, 1).unwrap(),
            BigInt::from(29)
        );
    }

    #[test]
    fn test_term_is_monotone_in_each_degree() {
        for j in 1..=3usize {
            let lo = multi_quadratic_term(&vec_of(&[2, 3]), 1, j).unwrap();
            let hi = multi_quadratic_term(&vec_of(&[2, 4]), 1, j).unwrap();
            assert!(lo <= hi, "j={j}");
        }
    }

    #[test]
    fn test_variety_bound_single_polynomial_identity() {
        let d = vec_of(&[2, 4]);
        let got = multi_quadratic_variety_bound(&d, 1, 1).unwrap().value;
        let expect = BigInt::from(3)
            + BigInt::from(2)
                * (multi_quadratic_term(&d, 1, 1).unwrap()
                    + multi_quadratic_term(&d, 1, 2).unwrap());
        assert_eq!(got, BigRational::from(expect));
    }

    #[test]
    fn test_variety_bound_rounds_odd_degrees_up() {
        let odd = multi_quadratic_variety_bound(&vec_of(&[3]), 1, 1).unwrap().value;
        let even = multi_quadratic_variety_bound(&vec_of(&[4]), 1, 1).unwrap().value;
        assert_eq!(odd, even);
    }

    #[test]
    fn test_variety_bound_rejects_low_degree() {
        assert!(multi_quadratic_variety_bound(&vec_of(&[2, 1]), 1, 1).is_err());
    }

    #[test]
    fn test_semi_bounds_closed_dominates_per_index() {
        let d = vec_of(&[2, 3]);
        let closed = multi_quadratic_semi_bounds(&d, 1, 2, None).unwrap().value;
        for i in 0..3 {
            let per = multi_quadratic_semi_bounds(&d, 1, 2, Some(i)).unwrap().value;
            assert!(per <= closed, "i={i}");
        }
    }
}
