//! Column-assignment sums over a degree matrix: the building blocks for
//! box mixed volumes written as sums (or maxima) of degree products.

use crate::error::MvError;
use combinat_core::{IntMatrix, IntVector};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;

/// Converts the capacity vector, insisting on positive entries summing to
/// the column count.
fn capacities(d: &IntMatrix, alpha: &IntVector) -> Result<Vec<usize>, MvError> {
    if alpha.len() != d.rows() {
        return Err(MvError::Shape(format!(
            "alpha has {} entries for a matrix with {} rows",
            alpha.len(),
            d.rows()
        )));
    }
    let caps: Vec<usize> = alpha
        .iter()
        .map(|a| a.to_usize().filter(|&a| a > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| MvError::Shape("alpha entries must be positive machine sizes".into()))?;
    let total: usize = caps.iter().sum();
    if total != d.cols() {
        return Err(MvError::Shape(format!(
            "alpha sums to {total} but the matrix has {} columns",
            d.cols()
        )));
    }
    Ok(caps)
}

/// Σ over 0/1 matrices `A` with row sums `alpha` and column sums 1 of
/// `Π d_{ij}^{A_{ij}}` — equivalently, a sum over ordered set partitions of
/// the columns into parts of sizes `alpha`.
///
/// # Errors
/// [`MvError::Shape`] on dimension mismatch or non-positive `alpha`.
pub fn n_refined(d: &IntMatrix, alpha: &IntVector) -> Result<BigInt, MvError> {
    let mut rem = capacities(d, alpha)?;
    let mut memo = HashMap::new();
    Ok(refined_rec(d, 0, &mut rem, &mut memo))
}

fn refined_rec(
    d: &IntMatrix,
    j: usize,
    rem: &mut Vec<usize>,
    memo: &mut HashMap<Vec<usize>, BigInt>,
) -> BigInt {
    if j == d.cols() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(rem.as_slice()) {
        return v.clone();
    }
    let mut acc = BigInt::ZERO;
    for i in 0..d.rows() {
        if rem[i] > 0 {
            rem[i] -= 1;
            acc += d.get(i, j) * refined_rec(d, j + 1, rem, memo);
            rem[i] += 1;
        }
    }
    memo.insert(rem.clone(), acc.clone());
    acc
}

/// Max over the same column assignments of `Π d_{ij}` — an upper bound for
/// any single summand of [`n_refined`] (entries are nonnegative).
///
/// # Errors
/// [`MvError::Shape`] on dimension mismatch or non-positive `alpha`.
pub fn n_coarse_bound(d: &IntMatrix, alpha: &IntVector) -> Result<BigInt, MvError> {
    let mut rem = capacities(d, alpha)?;
    let mut memo = HashMap::new();
    Ok(coarse_rec(d, 0, &mut rem, &mut memo))
}

fn coarse_rec(
    d: &IntMatrix,
    j: usize,
    rem: &mut Vec<usize>,
    memo: &mut HashMap<Vec<usize>, BigInt>,
) -> BigInt {
    if j == d.cols() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(rem.as_slice()) {
        return v.clone();
    }
    let mut best: Option<BigInt> = None;
    for i in 0..d.rows() {
        if rem[i] > 0 {
            rem[i] -= 1;
            let candidate = d.get(i, j) * coarse_rec(d, j + 1, rem, memo);
            rem[i] += 1;
            if best.as_ref().is_none_or(|b| candidate > *b) {
                best = Some(candidate);
            }
        }
    }
    let best = best.unwrap_or_else(BigInt::zero);
    memo.insert(rem.clone(), best.clone());
    best
}
