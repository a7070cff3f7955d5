//! Exact matrix permanents by inclusion–exclusion over column subsets
//! (Ryser), walked in Gray-code order so each step updates the row sums by
//! one column.

use crate::error::MvError;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Subset-range length handed to each worker when parallel; each range
/// recomputes its starting row sums once and then walks Gray codes.
#[cfg(feature = "parallel")]
const CHUNK: u64 = 1 << 13;

/// Smallest matrix order worth splitting across threads.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 14;

fn check_square(rows: &[Vec<BigInt>]) -> Result<usize, MvError> {
    let m = rows.len();
    if m >= 64 {
        return Err(MvError::Shape(format!(
            "permanent of order {m} exceeds the subset-enumeration range"
        )));
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != m) {
        return Err(MvError::Shape(format!(
            "permanent needs a square matrix; found a row of length {} in order {m}",
            bad.len()
        )));
    }
    Ok(m)
}

/// Inclusion–exclusion terms for subset codes `lo..hi` (codes index subsets
/// through the Gray code `g ^ (g >> 1)`), summed with the `(−1)^{|S|}` sign.
fn walk_range(rows: &[Vec<BigInt>], lo: u64, hi: u64) -> BigInt {
    let m = rows.len();
    let mut subset = lo ^ (lo >> 1);
    let mut sums: Vec<BigInt> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|j| subset >> j & 1 == 1)
                .map(|j| &rows[i][j])
                .sum()
        })
        .collect();
    let mut acc = BigInt::ZERO;
    let mut g = lo;
    loop {
        if !sums.iter().any(Zero::is_zero) {
            let prod: BigInt = sums.iter().product();
            if subset.count_ones() % 2 == 0 {
                acc += prod;
            } else {
                acc -= prod;
            }
        }
        g += 1;
        if g == hi {
            return acc;
        }
        let bit = g.trailing_zeros() as usize;
        if subset >> bit & 1 == 0 {
            for (sum, row) in sums.iter_mut().zip(rows) {
                *sum += &row[bit];
            }
        } else {
            for (sum, row) in sums.iter_mut().zip(rows) {
                *sum -= &row[bit];
            }
        }
        subset ^= 1 << bit;
    }
}

fn signed(m: usize, acc: BigInt) -> BigInt {
    if m % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Permanent of a square integer matrix, single-threaded.
///
/// # Errors
/// [`MvError::Shape`] if the matrix is not square or its order is ≥ 64.
pub fn permanent_seq(rows: &[Vec<BigInt>]) -> Result<BigInt, MvError> {
    let m = check_square(rows)?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    Ok(signed(m, walk_range(rows, 1, 1 << m)))
}

/// Permanent of a square integer matrix with the column-subset loop split
/// across threads. Exact integer addition is order-independent, so the result
/// is bit-identical to [`permanent_seq`].
///
/// # Errors
/// [`MvError::Shape`] if the matrix is not square or its order is ≥ 64.
#[cfg(feature = "parallel")]
pub fn permanent_par(rows: &[Vec<BigInt>]) -> Result<BigInt, MvError> {
    let m = check_square(rows)?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let total = 1u64 << m;
    if m < PAR_THRESHOLD {
        return Ok(signed(m, walk_range(rows, 1, total)));
    }
    let starts: Vec<u64> = (1..total).step_by(CHUNK as usize).collect();
    let acc: BigInt = starts
        .into_par_iter()
        .map(|lo| walk_range(rows, lo, (lo + CHUNK).min(total)))
        .sum();
    Ok(signed(m, acc))
}

/// Permanent of a square integer matrix, using the parallel kernel when the
/// `parallel` feature is enabled.
///
/// # Errors
/// [`MvError::Shape`] if the matrix is not square or its order is ≥ 64.
pub fn permanent(rows: &[Vec<BigInt>]) -> Result<BigInt, MvError> {
    #[cfg(feature = "parallel")]
    {
        permanent_par(rows)
    }
    #[cfg(not(feature = "parallel"))]
    {
        permanent_seq(rows)
    }
}
