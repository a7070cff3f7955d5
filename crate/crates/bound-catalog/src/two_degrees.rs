//! Bounds for sets defined by polynomials of two different degrees: the
//! refined component-count factor, the variety bound built from it, the
//! sign-component bound on a fixed-dimension set, and the sign-condition
//! wrapper.

use crate::error::BoundError;
use crate::result::BoundResult;
use combinat_core::{binomial, ExactScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn checked_degrees(d1: u64, d2: u64) -> Result<(), BoundError> {
    if d1 < 2 {
        return Err(BoundError::hypothesis(format!(
            "the smaller degree must be >= 2; got d1 = {d1}"
        )));
    }
    if d1 > d2 {
        return Err(BoundError::hypothesis(format!(
            "degrees must be ordered d1 <= d2; got d1 = {d1}, d2 = {d2}"
        )));
    }
    Ok(())
}

/// The refined per-level factor
/// `C(k+1,2) · d₁ · ((d₁−1)^{k−1} + (4(k−1)/3) · d₂ (d₂−1)^{k−2})`.
/// At `k = 1` the `(k−1)` multiplier annihilates the second summand, so
/// the value is `d₁` and the `(d₂−1)^{k−2}` power is never formed.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `2 ≤ d₁ ≤ d₂` and `k ≥ 1`.
pub fn refined_f(d1: u64, d2: u64, k: usize) -> Result<ExactScalar, BoundError> {
    checked_degrees(d1, d2)?;
    if k < 1 {
        return Err(BoundError::hypothesis("need k >= 1".to_string()));
    }
    let first = BigRational::from(BigInt::from(d1 - 1).pow((k - 1) as u32));
    let second = if k == 1 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(4 * (k as u64 - 1)), BigInt::from(3))
            * BigRational::from(BigInt::from(d2) * BigInt::from(d2 - 1).pow((k - 2) as u32))
    };
    Ok(BigRational::from(binomial(k as i64 + 1, 2) * BigInt::from(d1)) * (first + second))
}

/// The coarser envelope `8 C(k+1,3) d₁ d₂ (d₂−1)^{k−2}` that the variety
/// bound is usually quoted as; reported alongside the refined value.
///
/// # Errors
/// Same hypotheses as [`two_degree_variety_bound`].
pub fn two_degree_simple_form(d1: u64, d2: u64, k: usize) -> Result<BigInt, BoundError> {
    checked_degrees(d1, d2)?;
    if k < 2 {
        return Err(BoundError::hypothesis("need k >= 2".to_string()));
    }
    Ok(BigInt::from(8)
        * binomial(k as i64 + 1, 3)
        * BigInt::from(d1)
        * BigInt::from(d2)
        * BigInt::from(d2 - 1).pow((k - 2) as u32))
}

/// Upper bound on the number of connected components of a real variety
/// cut out by one polynomial of degree ≤ `d₁` and any number of degree
/// ≤ `d₂`, in `k` variables: `F(k) + F(k−1) + 1` for the refined factor
/// [`refined_f`]. The branch string carries the coarser envelope from
/// [`two_degree_simple_form`] for side-by-side reporting.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `2 ≤ d₁ ≤ d₂` and `k ≥ 2`.
pub fn two_degree_variety_bound(d1: u64, d2: u64, k: usize) -> Result<BoundResult, BoundError> {
    checked_degrees(d1, d2)?;
    if k < 2 {
        return Err(BoundError::hypothesis("need k >= 2".to_string()));
    }
    let value = refined_f(d1, d2, k)? + refined_f(d1, d2, k - 1)? + BigRational::from(BigInt::from(1));
    let simple = two_degree_simple_form(d1, d2, k)?;
    Ok(BoundResult::checked(
        value,
        "refined-two-degree",
        vec![
            format!("2 <= d1 = {d1} <= d2 = {d2}"),
            format!("k = {k} >= 2"),
            "exactly one defining polynomial has the smaller degree".to_string(),
        ],
        Some(format!("refined-sum; simple-form = {simple}")),
        false,
    ))
}

/// Which degree the ambiguous `d^j` factor of the sign-component bound
/// refers to. The written form leaves the symbol unresolved; the larger
/// degree is the conservative default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeReading {
    /// `d = d₂` (default; never smaller than the other reading).
    #[default]
    LargerDegree,
    /// `d = d₁`.
    SmallerDegree,
}

/// Bound on the Betti numbers of the realizable sign conditions of `s`
/// polynomials of degree ≤ `d₂` on a set of dimension `k′` cut out by
/// polynomials of degree ≤ `d₁`, in `k` variables:
/// `Σ_{j=0}^{k′} 4^j C(s+1,j) (C(k+1, k−k′+j+1) (2d₁)^{k−k′} d^j
///  max(2d₁,d₂)^{k′−j} + 2(k−j+1))` with `d` fixed by `reading`.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `1 ≤ d₁ ≤ d₂` and `k′ ≤ k`.
pub fn sign_components_two_degree_bound(
    d1: u64,
    d2: u64,
    k: usize,
    k_prime: usize,
    s: u64,
    reading: DegreeReading,
) -> Result<BoundResult, BoundError> {
    if d1 < 1 || d1 > d2 {
        return Err(BoundError::hypothesis(format!(
            "degrees must satisfy 1 <= d1 <= d2; got d1 = {d1}, d2 = {d2}"
        )));
    }
    if k_prime > k {
        return Err(BoundError::hypothesis(format!(
            "the set dimension must satisfy k' <= k; got k' = {k_prime}, k = {k}"
        )));
    }
    let (d, branch) = match reading {
        DegreeReading::LargerDegree => (d2, "d = d2 (larger degree)"),
        DegreeReading::SmallerDegree => (d1, "d = d1 (smaller degree)"),
    };
    let level = BigInt::from((2 * d1).max(d2));
    let outer_power = BigInt::from(2 * d1).pow((k - k_prime) as u32);
    let mut value = BigInt::zero();
    for j in 0..=k_prime {
        let choose = binomial(s as i64 + 1, j as i64);
        if choose == BigInt::zero() {
            continue;
        }
        let main = binomial(k as i64 + 1, (k - k_prime + j + 1) as i64)
            * &outer_power
            * BigInt::from(d).pow(j as u32)
            * level.pow((k_prime - j) as u32);
        value += BigInt::from(4u32).pow(j as u32)
            * choose
            * (main + BigInt::from(2 * (k as u64 - j as u64 + 1)));
    }
    Ok(BoundResult::checked(
        BigRational::from(value),
        "component-two-degree",
        vec![
            format!("1 <= d1 = {d1} <= d2 = {d2}"),
            format!("k' = {k_prime} <= k = {k}"),
            format!("s = {s} >= 0"),
        ],
        Some(branch.to_string()),
        true,
    ))
}

/// Sign-condition wrapper over the refined two-degree bound, valid over
/// any real closed field: `Σ_{j=1}^{k′−i} C(s,j) 4^j (F(2d₁,2d₂,k) +
/// F(2d₁,2d₂,k−1) + 1)` for the `i`-th Betti numbers summed over the
/// realizable sign conditions of `s` polynomials on a set of dimension
/// `k′`.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `1 ≤ d₁ ≤ d₂`, `s ≥ 1`, and
/// `i < k′ < k`.
pub fn two_degree_semi_bounds(
    d1: u64,
    d2: u64,
    k: usize,
    k_prime: usize,
    s: u64,
    i: usize,
) -> Result<BoundResult, BoundError> {
    if d1 < 1 || d1 > d2 {
        return Err(BoundError::hypothesis(format!(
            "degrees must satisfy 1 <= d1 <= d2; got d1 = {d1}, d2 = {d2}"
        )));
    }
    if s < 1 {
        return Err(BoundError::hypothesis(
            "need at least one sign-condition polynomial".to_string(),
        ));
    }
    if i >= k_prime || k_prime >= k {
        return Err(BoundError::hypothesis(format!(
            "indices must satisfy i < k' < k (the sum over j is empty otherwise); \
             got i = {i}, k' = {k_prime}, k = {k}"
        )));
    }
    let per_level = refined_f(2 * d1, 2 * d2, k)?
        + refined_f(2 * d1, 2 * d2, k - 1)?
        + BigRational::from(BigInt::from(1));
    let mut weight = BigInt::zero();
    for j in 1..=(k_prime - i) {
        weight += binomial(s as i64, j as i64) * BigInt::from(4u32).pow(j as u32);
    }
    Ok(BoundResult::checked(
        BigRational::from(weight) * per_level,
        "two-degree-sign-conditions",
        vec![
            format!("1 <= d1 = {d1} <= d2 = {d2}"),
            format!("s = {s} >= 1"),
            format!("0 <= i = {i} < k' = {k_prime} < k = {k}"),
            "valid over any real closed field".to_string(),
        ],
        Some(format!("sign-conditions(i={i})")),
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn test_refined_factor_pinned_values() {
        // k=2: C(3,2)·2·(1 + (4/3)·2·1) = 6·(11/3) = 22.
        assert_eq!(refined_f(2, 2, 2).unwrap(), rat(22));
        // k=1 collapses to d1.
        assert_eq!(refined_f(2, 5, 1).unwrap(), rat(2));
        assert_eq!(refined_f(3, 3, 1).unwrap(), rat(3));
    }

    #[test]
    fn test_refined_factor_rejects_bad_degrees() {
        assert!(refined_f(1, 3, 2).is_err());
        assert!(refined_f(3, 2, 2).is_err());
        assert!(refined_f(2, 2, 0).is_err());
    }

    #[test]
    fn test_variety_bound_pinned_value() {
        // F(2,2,2) + F(2,2,1) + 1 = 22 + 2 + 1 = 25.
        let r = two_degree_variety_bound(2, 2, 2).unwrap();
        assert_eq!(r.value, rat(25));
        assert!(!r.exact);
        // k=2 simple form: 8·C(3,3)·d1·d2 = 8·4 = 32, carried in the branch.
        assert_eq!(
            r.branch.as_deref(),
            Some("refined-sum; simple-form = 32")
        );
    }

    #[test]
    fn test_variety_bound_value_is_integral_here_despite_rational_form() {
        let r = two_degree_variety_bound(2, 2, 2).unwrap();
        assert!(r.value.is_integer());
    }

    #[test]
    fn test_simple_form_eventually_dominates_refined_value() {
        // The envelope exceeds the refined sum once the degrees grow.
        for k in 2..=5usize {
            for d in [4u64, 6, 10] {
                let refined = two_degree_variety_bound(d, d, k).unwrap().value;
                let simple = BigRational::from(two_degree_simple_form(d, d, k).unwrap());
                assert!(simple >= refined, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn test_sign_components_readings_are_ordered() {
        // The larger-degree reading can only increase the value; the two
        // readings agree when d1 = d2.
        for (d1, d2, k, kp, s) in [(2u64, 5u64, 4usize, 2usize, 2u64), (2, 2, 3, 1, 1)] {
            let larger =
                sign_components_two_degree_bound(d1, d2, k, kp, s, DegreeReading::LargerDegree)
                    .unwrap()
                    .value;
            let smaller =
                sign_components_two_degree_bound(d1, d2, k, kp, s, DegreeReading::SmallerDegree)
                    .unwrap()
                    .value;
            if d1 == d2 {
                assert_eq!(larger, smaller);
            } else {
                assert!(larger >= smaller, "d1={d1} d2={d2}");
            }
        }
    }

    #[test]
    fn test_sign_components_zero_conditions_hand_expansion() {
        // s = 0 still keeps two terms, because the weight is C(s+1,j):
        // j=0: C(4,3)·4²·4 + 2·4 = 264;  j=1: 4·(C(4,4)·4²·3 + 2·3) = 216.
        let (d1, d2, k, kp) = (2u64, 3u64, 3usize, 1usize);
        let r = sign_components_two_degree_bound(d1, d2, k, kp, 0, DegreeReading::default())
            .unwrap();
        let j0 = binomial(4, 3) * BigInt::from(4).pow(2) * BigInt::from(4) + BigInt::from(8);
        let j1 = BigInt::from(4) * (binomial(4, 4) * BigInt::from(4).pow(2) * BigInt::from(3) + BigInt::from(6));
        assert_eq!(r.value, BigRational::from(j0 + j1));
        assert!(r.exact);
    }

    #[test]
    fn test_sign_components_default_reading_is_larger_degree() {
        let r = sign_components_two_degree_bound(2, 5, 3, 2, 1, DegreeReading::default()).unwrap();
        assert_eq!(r.branch.as_deref(), Some("d = d2 (larger degree)"));
    }

    #[test]
    fn test_semi_bounds_scale_the_doubled_refined_sum() {
        // s=1, i=0, k'=1: W = 4, so the value is 4(F(2d1,2d2,k)+F(2d1,2d2,k−1)+1).
        let (d1, d2, k) = (1u64, 2u64, 3usize);
        let per_level = refined_f(2, 4, 3).unwrap()
            + refined_f(2, 4, 2).unwrap()
            + BigRational::one();
        let got = two_degree_semi_bounds(d1, d2, k, 1, 1, 0).unwrap().value;
        assert_eq!(got, rat(4) * per_level);
    }

    #[test]
    fn test_semi_bounds_reject_empty_index_range() {
        assert!(two_degree_semi_bounds(2, 2, 3, 2, 1, 2).is_err());
        assert!(two_degree_semi_bounds(2, 2, 3, 3, 1, 0).is_err());
    }
}
