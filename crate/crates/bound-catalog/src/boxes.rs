//! Bounds for varieties whose defining polynomials have per-variable
//! degree boxes: an inclusion–exclusion core over refined monomial counts,
//! a row-doubled subset sum for the variety bound, and sign-condition
//! wrappers.

use crate::error::BoundError;
use crate::result::BoundResult;
use crate::total_degree::round_up_even;
use combinat_core::{binomial, IntMatrix, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polytope_mv::n_refined;

/// Calls `f` on every composition of `total` into `parts` strictly
/// positive summands, in lexicographic order.
fn for_each_positive_composition(total: usize, parts: usize, f: &mut impl FnMut(&[u64])) {
    fn rec(remaining: usize, parts_left: usize, scratch: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if parts_left == 1 {
            scratch.push(remaining as u64);
            f(scratch);
            scratch.pop();
            return;
        }
        // Leave at least 1 for each remaining part.
        for first in 1..=(remaining - (parts_left - 1)) {
            scratch.push(first as u64);
            rec(remaining - first, parts_left - 1, scratch, f);
            scratch.pop();
        }
    }
    if parts == 0 || total < parts {
        return;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), f);
}

/// Calls `f` on every `r`-element subset of `0..n`, as a sorted index
/// slice, in lexicographic order.
fn for_each_combination(n: usize, r: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, r: usize, start: usize, scratch: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if scratch.len() == r {
            f(scratch);
            return;
        }
        let needed = r - scratch.len();
        for i in start..=(n - needed) {
            scratch.push(i);
            rec(n, r, i + 1, scratch, f);
            scratch.pop();
        }
    }
    if r > n {
        return;
    }
    rec(n, r, 0, &mut Vec::with_capacity(r), f);
}

/// The inclusion–exclusion core of the box family, for an `ℓ × k` degree
/// matrix: `Σ_{j=ℓ}^{k} (−1)^{k−j} Σ_{|J|=j} Σ_{α ∈ Z_{>0}^ℓ, Σα=j}
/// N(d_J, α)` where `N` is the refined monomial count over the selected
/// columns. Returns 0 when the matrix has more rows than columns.
///
/// # Errors
/// [`BoundError::Hypothesis`] if the matrix is empty or a degree is
/// negative.
pub fn box_generic_core(d: &IntMatrix) -> Result<BigInt, BoundError> {
    let ell = d.rows();
    let k = d.cols();
    if ell == 0 || k == 0 {
        return Err(BoundError::hypothesis(
            "the degree box matrix must be nonempty".to_string(),
        ));
    }
    let mut total = BigInt::zero();
    for j in ell..=k {
        let sign = if (k - j) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        for_each_combination(k, j, &mut |cols| {
            let selected = d.select_cols(cols);
            for_each_positive_composition(j, ell, &mut |alpha| {
                let alpha = IntVector::from_u64s(alpha);
                let count = n_refined(&selected, &alpha)
                    .expect("positive composition of the column count is a valid capacity vector");
                total += &sign * count;
            });
        });
    }
    Ok(total)
}

/// Rounds every entry up to an even integer and stacks the matrix on top
/// of itself, giving the `2ℓ × k` matrix the variety bound sums over.
fn doubled_rows_rounded(d: &IntMatrix) -> IntMatrix {
    let rounded = d.map(|x| {
        let u = u64::try_from(x).expect("entries validated nonnegative");
        BigInt::from(round_up_even(u))
    });
    rounded.stack(&rounded)
}

fn require_box_entries_at_least_two(d: &IntMatrix) -> Result<(), BoundError> {
    for r in 0..d.rows() {
        if d.row(r).iter().any(|x| *x < BigInt::from(2)) {
            return Err(BoundError::hypothesis(format!(
                "every degree-box extent must be >= 2; row {r} violates this"
            )));
        }
    }
    Ok(())
}

/// Upper bound on the total Betti numbers of the variety cut out by
/// polynomials with the given `ℓ × k` degree boxes:
/// `3 + Σ_{1 ≤ |I| ≤ k} 2^{|I|+1} · core(d″_I)` where `d″` stacks the
/// rounded-up matrix on itself and `I` ranges over row subsets.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless every extent is ≥ 2.
pub fn box_variety_bound(d: &IntMatrix) -> Result<BoundResult, BoundError> {
    if d.rows() == 0 || d.cols() == 0 {
        return Err(BoundError::hypothesis(
            "the degree box matrix must be nonempty".to_string(),
        ));
    }
    require_box_entries_at_least_two(d)?;
    let k = d.cols();
    let stacked = doubled_rows_rounded(d);
    let mut value = BigInt::from(3);
    for i in 1..=k.min(stacked.rows()) {
        let weight = BigInt::from(2u32).pow((i + 1) as u32);
        for_each_combination(stacked.rows(), i, &mut |rows| {
            let sub = stacked.select_rows(rows);
            let core = box_generic_core(&sub).expect("submatrix of a validated matrix");
            value += &weight * core;
        });
    }
    Ok(BoundResult::checked(
        BigRational::from(value),
        "multi-degree-boxes",
        vec!["every degree-box extent >= 2".to_string()],
        None,
        true,
    ))
}

/// Sign-condition wrappers around [`box_variety_bound`]: with `i = Some(i)`
/// the per-index bound `Σ_{j=1}^{k−i} C(s,j) 4^j · V`, with `i = None` the
/// closed-set bound `Σ_{i=0}^{k} Σ_{j=1}^{k−i} C(s+1,j) 6^j · V`, where `V`
/// is the variety bound for the common degree boxes.
///
/// # Errors
/// [`BoundError::Hypothesis`] unless `s ≥ 1`, extents are ≥ 2, and any
/// given `i` satisfies `i ≤ k−1`.
pub fn box_semi_bounds(
    d: &IntMatrix,
    s: u64,
    i: Option<usize>,
) -> Result<BoundResult, BoundError> {
    if s < 1 {
        return Err(BoundError::hypothesis(
            "need at least one sign-condition polynomial".to_string(),
        ));
    }
    let variety = box_variety_bound(d)?.value;
    let k = d.cols();
    let mut assumptions = vec![
        "every degree-box extent >= 2".to_string(),
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
            let mut weight = BigInt::zero();
            for j in 1..=(k - i) {
                weight += binomial(s as i64, j as i64) * BigInt::from(4u32).pow(j as u32);
            }
            (BigRational::from(weight) * &variety, format!("sign-conditions(i={i})"))
        }
        None => {
            let mut weight = BigInt::zero();
            for i in 0..=k {
                for j in 1..=(k - i) {
                    weight += binomial(s as i64 + 1, j as i64) * BigInt::from(6u32).pow(j as u32);
                }
            }
            (BigRational::from(weight) * &variety, "closed-set".to_string())
        }
    };
    Ok(BoundResult::checked(
        value,
        "multi-degree-boxes",
        assumptions,
        Some(branch),
        true,
    ))
}
