//! Counting nonnegative integer matrices with prescribed margins
//! (contingency tables).

use crate::error::CombinatError;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;

/// Number of nonnegative integer matrices whose row sums are `rows` and
/// column sums are `cols`, counted exactly.
///
/// The count is computed by recursing one row at a time over every way of
/// distributing that row's margin across the residual column margins, with
/// memoization keyed on the residual margins. Because the count is invariant
/// under permuting rows or columns, margins are kept sorted (and zero margins
/// dropped) so that equivalent residual states share one memo entry.
///
/// # Errors
/// [`CombinatError::MarginMismatch`] if the two margin sums differ.
pub fn contingency_count(rows: &[u64], cols: &[u64]) -> Result<BigInt, CombinatError> {
    let row_total: u64 = rows.iter().sum();
    let col_total: u64 = cols.iter().sum();
    if row_total != col_total {
        return Err(CombinatError::MarginMismatch {
            rows: row_total,
            cols: col_total,
        });
    }
    let rows = canonical(rows);
    let cols = canonical(cols);
    let mut memo = HashMap::new();
    Ok(count(&rows, cols, &mut memo))
}

/// Sorted descending with zero margins dropped (a zero margin forces an
/// all-zero row/column and cannot change the count).
fn canonical(margins: &[u64]) -> Vec<u64> {
    let mut m: Vec<u64> = margins.iter().copied().filter(|&x| x > 0).collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    m
}

type Memo = HashMap<(Vec<u64>, Vec<u64>), BigInt>;

fn count(rows: &[u64], cols: Vec<u64>, memo: &mut Memo) -> BigInt {
    if rows.is_empty() {
        // Margin sums matched at entry and zero columns are dropped, so no
        // residual column demand can remain here.
        debug_assert!(cols.is_empty());
        return BigInt::one();
    }
    let key = (rows.to_vec(), cols.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }

    let mut total = BigInt::ZERO;
    let mut residual = cols.clone();
    distribute(rows[0], 0, &mut residual, &rows[1..], memo, &mut total);
    memo.insert(key, total.clone());
    total
}

/// Enumerates every split of `remaining` units of the current row across
/// columns `idx..`, recursing into `count` once the row is fully placed.
fn distribute(
    remaining: u64,
    idx: usize,
    residual: &mut Vec<u64>,
    later_rows: &[u64],
    memo: &mut Memo,
    total: &mut BigInt,
) {
    if idx == residual.len() {
        if remaining == 0 {
            *total += count(later_rows, canonical(residual), memo);
        }
        return;
    }
    let cap = residual[idx].min(remaining);
    for a in 0..=cap {
        residual[idx] -= a;
        distribute(remaining - a, idx + 1, residual, later_rows, memo, total);
        residual[idx] += a;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial::factorial;

    /// Brute-force oracle: enumerate every candidate matrix entry by entry.
    fn count_by_enumeration(rows: &[u64], cols: &[u64]) -> BigInt {
        fn rec(rows: &[u64], cols: &mut Vec<u64>) -> BigInt {
            match rows.split_first() {
                None => {
                    if cols.iter().all(|&c| c == 0) {
                        BigInt::one()
                    } else {
                        BigInt::ZERO
                    }
                }
                Some((&r, rest)) => {
                    fn fill(
                        remaining: u64,
                        idx: usize,
                        rest: &[u64],
                        cols: &mut Vec<u64>,
                    ) -> BigInt {
                        if idx == cols.len() {
                            return if remaining == 0 {
                                rec(rest, cols)
                            } else {
                                BigInt::ZERO
                            };
                        }
                        let mut acc = BigInt::ZERO;
                        for a in 0..=cols[idx].min(remaining) {
                            cols[idx] -= a;
                            acc += fill(remaining - a, idx + 1, rest, cols);
                            cols[idx] += a;
                        }
                        acc
                    }
                    fill(r, 0, rest, cols)
                }
            }
        }
        rec(rows, &mut cols.to_vec())
    }

    #[test]
    fn test_permutation_matrices() {
        for n in 1..=5u64 {
            let ones = vec![1u64; n as usize];
            assert_eq!(
                contingency_count(&ones, &ones).unwrap(),
                factorial(n as usize)
            );
        }
    }

    #[test]
    fn test_small_pinned_values() {
        assert_eq!(contingency_count(&[2], &[1, 1]).unwrap(), BigInt::one());
        assert_eq!(
            contingency_count(&[2, 1], &[1, 1, 1]).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn test_matches_enumeration_oracle() {
        let cases: &[(&[u64], &[u64])] = &[
            (&[2, 2], &[2, 2]),
            (&[3, 1, 2], &[2, 2, 2]),
            (&[4, 2], &[1, 2, 3]),
            (&[2, 2, 2], &[3, 3]),
            (&[5], &[1, 1, 3]),
            (&[1, 1, 1, 1], &[2, 2]),
        ];
        for (rows, cols) in cases {
            assert_eq!(
                contingency_count(rows, cols).unwrap(),
                count_by_enumeration(rows, cols),
                "margins {rows:?} x {cols:?}"
            );
        }
    }

    #[test]
    fn test_invariant_under_margin_permutations() {
        let rows = [3, 1, 2];
        let cols = [2, 4];
        let reference = contingency_count(&rows, &cols).unwrap();
        assert_eq!(contingency_count(&[1, 2, 3], &[4, 2]).unwrap(), reference);
        assert_eq!(contingency_count(&[2, 3, 1], &[2, 4]).unwrap(), reference);
    }

    #[test]
    fn test_zero_margins_ignored() {
        assert_eq!(
            contingency_count(&[2, 0, 1], &[1, 1, 0, 1]).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn test_margin_mismatch_is_error() {
        assert_eq!(
            contingency_count(&[2, 1], &[1, 1]).unwrap_err(),
            CombinatError::MarginMismatch { rows: 3, cols: 2 }
        );
    }
}
