//! Classical Betti-number bounds used as comparison baselines: the
//! total-degree variety bound, the sign-condition refinements of it, the
//! quadratic-inequality bound, and the smooth complete-intersection
//! component counts.

use crate::error::BoundError;
use crate::result::BoundResult;
use combinat_core::binomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// A classical bound, selected by shape of the defining data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicBound {
    /// `d(2d−1)^{k−1}`: total Betti numbers of a real algebraic set in
    /// `R^k` cut out by polynomials of degree ≤ `d`. Catalog id `optm`.
    VarietyTotalDegree { d: u64, k: usize },
    /// `Σ_{i=0}^{k} Σ_{j=0}^{k−i} C(s+1,j) 6^j · d(2d−1)^{k−1}`: total
    /// Betti numbers of a closed set defined by `s ≥ 1` polynomial
    /// inequalities. Catalog id `closed-semialgebraic`.
    ClosedSignConditions { s: u64, d: u64, k: usize },
    /// Same shape with `C(2ks+1, j)`: arbitrary (not necessarily closed)
    /// sets defined from `s` polynomials. Catalog id `general-semialgebraic`.
    GeneralSemialgebraic { s: u64, d: u64, k: usize },
    /// `½ Σ_{j=0}^{min(s,k−i)} C(s,j) C(k+1,j) 2^j`: the `i`-th Betti
    /// number of a set cut out by `s ≤ k` quadratic inequalities.
    /// Catalog id `quadratic-inequalities`.
    QuadraticInequalities { s: usize, k: usize, i: usize },
    /// `d_1⋯d_s · Σ_{i=0}^{dim} (d−1)^{k−s−i} C(k−i, k−i−s)` with
    /// `d = max d_j`: connected components of a smooth real algebraic set
    /// of dimension `dim` in `R^k` cut out by `s ≤ k−1` polynomials whose
    /// ideal is radical; with `regular_sequence` the binomial sharpens to
    /// `C(k−i−1, k−i−s)`. Catalog id `smooth-components`.
    SmoothComponents {
        degrees: Vec<u64>,
        k: usize,
        dim: usize,
        regular_sequence: bool,
    },
}

fn power_bound(d: u64, k: usize) -> BigInt {
    BigInt::from(d) * BigInt::from(2 * d - 1).pow((k - 1) as u32)
}

/// Evaluates a classical bound exactly.
///
/// # Errors
/// [`BoundError::Hypothesis`] when the variant's side conditions fail
/// (see each variant's doc comment).
pub fn classic_bound(bound: &ClassicBound) -> Result<BoundResult, BoundError> {
    match bound {
        ClassicBound::VarietyTotalDegree { d, k } => {
            if *d < 1 || *k < 1 {
                return Err(BoundError::hypothesis(format!(
                    "need d >= 1 and k >= 1; got d = {d}, k = {k}"
                )));
            }
            Ok(BoundResult::checked(
                BigRational::from(power_bound(*d, *k)),
                "optm",
                vec![format!("d = {d} >= 1"), format!("k = {k} >= 1")],
                None,
                true,
            ))
        }
        ClassicBound::ClosedSignConditions { s, d, k } => {
            if *s < 1 || *d < 1 || *k < 1 {
                return Err(BoundError::hypothesis(format!(
                    "need s >= 1, d >= 1, k >= 1; got s = {s}, d = {d}, k = {k}"
                )));
            }
            let value = sign_condition_weight(*k, |j| binomial(*s as i64 + 1, j), 6)
                * power_bound(*d, *k);
            Ok(BoundResult::checked(
                BigRational::from(value),
                "closed-semialgebraic",
                vec![
                    format!("s = {s} >= 1"),
                    format!("d = {d} >= 1"),
                    format!("k = {k} >= 1"),
                ],
                None,
                true,
            ))
        }
        ClassicBound::GeneralSemialgebraic { s, d, k } => {
            if *d < 1 || *k < 1 {
                return Err(BoundError::hypothesis(format!(
                    "need d >= 1 and k >= 1; got d = {d}, k = {k}"
                )));
            }
            let value = sign_condition_weight(*k, |j| binomial((2 * *k as u64 * s + 1) as i64, j), 6)
                * power_bound(*d, *k);
            Ok(BoundResult::checked(
                BigRational::from(value),
                "general-semialgebraic",
                vec![
                    format!("s = {s} >= 0"),
                    format!("d = {d} >= 1"),
                    format!("k = {k} >= 1"),
                ],
                None,
                true,
            ))
        }
        ClassicBound::QuadraticInequalities { s, k, i } => {
            if *s > *k || *i >= *k {
                return Err(BoundError::hypothesis(format!(
                    "need s <= k and i <= k-1; got s = {s}, k = {k}, i = {i}"
                )));
            }
            let mut sum = BigInt::zero();
            for j in 0..=(*s).min(k - i) {
                sum += binomial(*s as i64, j as i64)
                    * binomial(*k as i64 + 1, j as i64)
                    * BigInt::from(2u32).pow(j as u32);
            }
            Ok(BoundResult::checked(
                BigRational::new(sum, BigInt::from(2)),
                "quadratic-inequalities",
                vec![
                    format!("s = {s} <= k = {k}"),
                    format!("0 <= i = {i} <= k-1"),
                    "defining inequalities have degree <= 2".to_string(),
                ],
                None,
                false,
            ))
        }
        ClassicBound::SmoothComponents {
            degrees,
            k,
            dim,
            regular_sequence,
        } => {
            let s = degrees.len();
            if s == 0 || s > k.saturating_sub(1) {
                return Err(BoundError::hypothesis(format!(
                    "need 1 <= s <= k-1 defining polynomials; got s = {s}, k = {k}"
                )));
            }
            if *dim > *k {
                return Err(BoundError::hypothesis(format!(
                    "dimension {dim} exceeds the ambient dimension {k}"
                )));
            }
            if degrees.iter().any(|&d| d < 1) {
                return Err(BoundError::hypothesis("all degrees must be >= 1".to_string()));
            }
            let d_max = *degrees.iter().max().expect("nonempty degree list");
            let mut sum = BigInt::zero();
            for i in 0..=*dim {
                let lower = *k as i64 - i as i64 - s as i64;
                if lower < 0 {
                    // The binomial vanishes exactly where the power of
                    // (d−1) would go negative, so these terms drop out.
                    continue;
                }
                let upper = if *regular_sequence {
                    *k as i64 - i as i64 - 1
                } else {
                    *k as i64 - i as i64
                };
                sum += BigInt::from(d_max - 1).pow(lower as u32) * binomial(upper, lower);
            }
            let product: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
            let branch = if *regular_sequence {
                "regular-sequence"
            } else {
                "radical-ideal"
            };
            Ok(BoundResult::checked(
                BigRational::from(product * sum),
                "smooth-components",
                vec![
                    format!("1 <= s = {s} <= k-1, k = {k}"),
                    "the algebraic set is smooth of the stated dimension".to_string(),
                    if *regular_sequence {
                        "the defining polynomials form a regular sequence".to_string()
                    } else {
                        "the defining ideal is radical".to_string()
                    },
                ],
                Some(branch.to_string()),
                true,
            ))
        }
    }
}

/// `Σ_{i=0}^{k} Σ_{j=0}^{k−i} w(j) base^j` — the common sign-condition
/// weight factor of the semi-algebraic refinements.
fn sign_condition_weight(k: usize, w: impl Fn(i64) -> BigInt, base: u32) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=k {
        for j in 0..=(k - i) {
            total += w(j as i64) * BigInt::from(base).pow(j as u32);
        }
    }
    total
}
