//! Closed-form Betti sums and bounds for the structured support families:
//! total-degree complete intersections, multi-degree hypersurfaces, block
//! systems, and partially quadratic systems.

use crate::error::ChiError;
use crate::khovanskii::positive_compositions;
use combinat_core::{
    binomial, binomial_general, complete_homogeneous, factorial, IntMatrix, IntVector,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polytope_mv::n_refined;

fn parity_term(k: usize, ell: usize) -> BigInt {
    // (−1)^{k−ℓ+1}
    if (k - ell) % 2 == 0 {
        BigInt::from(-1)
    } else {
        BigInt::one()
    }
}

/// Total Betti number of a generic complete intersection of ℓ dense
/// polynomials of total degrees `d` in k variables:
/// `1 + (−1)^{k−ℓ+1} + d₁⋯d_ℓ · Σ_{j=0}^{k−ℓ} (−1)^{k−ℓ+j} binom(k,j+ℓ) h_j(d)`.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k and every dᵢ ≥ 1.
pub fn betti_ci_total_distinct(k: usize, d: &IntVector) -> Result<BigInt, ChiError> {
    let ell = d.len();
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {k}"
        )));
    }
    if d.iter().any(Zero::is_zero) {
        return Err(ChiError::Hypothesis("degrees must satisfy d_i ≥ 1".into()));
    }
    let degrees: Vec<BigInt> = d.iter().cloned().collect();
    let mut alternating = BigInt::ZERO;
    for j in 0..=(k - ell) {
        let sign = if (k - ell + j) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        alternating +=
            sign * binomial(k as i64, (j + ell) as i64) * complete_homogeneous(j, &degrees);
    }
    let product: BigInt = degrees.iter().product();
    Ok(BigInt::one() + parity_term(k, ell) + product * alternating)
}

/// Total Betti number of one generic polynomial of multi-degree `d`
/// (per-variable degree caps, box support):
/// `1 + (−1)^k + Σ_{j=1}^{k} (−1)^{k−j} Σ_{|J|=j} j!·Π_{i∈J} d_i`.
///
/// # Errors
/// [`ChiError::Shape`] if `d` is empty.
pub fn betti_one_multi(d: &IntVector) -> Result<BigInt, ChiError> {
    let k = d.len();
    if k == 0 {
        return Err(ChiError::Shape("multi-degree vector is empty".into()));
    }
    // Elementary symmetric polynomials e_j(d).
    let mut e = vec![BigInt::ZERO; k + 1];
    e[0] = BigInt::one();
    for (i, di) in d.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            let add = di * &e[j - 1];
            e[j] += add;
        }
    }
    let mut total = BigInt::one() + parity_term(k, 1); // 1 + (−1)^k
    for (j, ej) in e.iter().enumerate().skip(1) {
        let sign = if (k - j) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        total += sign * factorial(j) * ej;
    }
    Ok(total)
}

/// Upper bound for the total Betti number of ℓ generic polynomials whose
/// supports are products of simplices over `p` blocks of sizes `block_sizes`
/// with block degrees `d`:
/// `1 + (−1)^{k−ℓ+1} + (k−ℓ+2)²·binom(k,ℓ−1)·multinomial(k;𝐤)⁻¹·
///  (1+p)^{3k−ℓ+1}/(p(p+2))·Π dᵢ^{kᵢ}` — a genuine rational.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k (k = Σ block sizes) and every
/// block size ≥ 1; [`ChiError::Shape`] on length mismatch.
pub fn betti_blocks_bound(
    block_sizes: &IntVector,
    d: &IntVector,
    ell: usize,
) -> Result<BigRational, ChiError> {
    let p = block_sizes.len();
    if p == 0 || d.len() != p {
        return Err(ChiError::Shape(format!(
            "{} block sizes with {} degrees",
            p,
            d.len()
        )));
    }
    if block_sizes.iter().any(Zero::is_zero) {
        return Err(ChiError::Hypothesis("block sizes must be ≥ 1".into()));
    }
    let sizes: Vec<usize> = block_sizes
        .iter()
        .map(|s| s.to_string().parse().ok())
        .collect::<Option<_>>()
        .ok_or_else(|| ChiError::Shape("block size exceeds machine range".into()))?;
    let k: usize = sizes.iter().sum();
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {k}"
        )));
    }

    let square = BigInt::from((k - ell + 2) as u64).pow(2);
    let choose = binomial(k as i64, ell as i64 - 1);
    // multinomial(k; 𝐤)⁻¹ = Π kᵢ! / k!.
    let inv_multinomial = BigRational::new(
        sizes.iter().map(|&s| factorial(s)).product(),
        factorial(k),
    );
    let growth = BigRational::new(
        BigInt::from((1 + p) as u64).pow((3 * k - ell + 1) as u32),
        BigInt::from((p * (p + 2)) as u64),
    );
    let degree_product: BigInt = d
        .iter()
        .zip(&sizes)
        .map(|(di, &ki)| di.pow(ki as u32))
        .product();

    Ok(
        BigRational::from_integer(BigInt::one() + parity_term(k, ell))
            + BigRational::from_integer(square * choose * degree_product)
                * inv_multinomial
                * growth,
    )
}

/// Upper bound for ℓ generic polynomials in k₁+k₂ variables, each of degree
/// ≤ d in the first block and quadratic in the second:
/// `2 + (−1)^{k−ℓ+1} + ℓ·2^ℓ·(k₁+k₂)^{ℓ−1}·(2d(k₁+k₂)+1)^{k₁}`.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k₁+k₂ and d ≥ 1.
pub fn betti_partially_quadratic_bound(
    d: u64,
    k1: usize,
    k2: usize,
    ell: usize,
) -> Result<BigInt, ChiError> {
    let k = k1 + k2;
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k₁+k₂; got ℓ = {ell}, k₁+k₂ = {k}"
        )));
    }
    if d < 1 {
        return Err(ChiError::Hypothesis("need d ≥ 1".into()));
    }
    let kb = BigInt::from(k as u64);
    let main = BigInt::from(ell as u64)
        * BigInt::from(2u64).pow(ell as u32)
        * kb.pow(ell as u32 - 1)
        * (BigInt::from(2 * d) * &kb + BigInt::one()).pow(k1 as u32);
    Ok(BigInt::from(2) + parity_term(k, ell) + main)
}

/// The exact alternating inner sum of the partially-quadratic analysis:
/// `F(j₁,k₂) = Σ_{j₂=0}^{k₂} binom(j₁+j₂,j₂)·binom(j₁+j₂−1,ℓ−1)·
///  binom(k₂,j₂)·(−2)^{j₂}` — the middle factor read as a falling-factorial
/// binomial so that j₁ = j₂ = 0 contributes `binom(−1,ℓ−1) = (−1)^{ℓ−1}`.
pub fn inner_f(j1: usize, k2: usize, ell: usize) -> BigInt {
    let mut total = BigInt::ZERO;
    for j2 in 0..=k2 {
        let top = BigInt::from(j1 as i64 + j2 as i64 - 1);
        let term = binomial((j1 + j2) as i64, j2 as i64)
            * binomial_general(&top, ell as i64 - 1)
            * binomial(k2 as i64, j2 as i64)
            * BigInt::from(-2).pow(j2 as u32);
        total += term;
    }
    total
}

/// Upper bound for ℓ generic polynomials in k₁+k₂ variables, multilinear of
/// multi-degree `d` on k₁ single-variable blocks and quadratic on the rest:
/// `2 + (−1)^{k−ℓ+1} + ℓ·2^ℓ·k₁!·(k₁+k₂)^{ℓ−1}·(2(k₁+k₂)+1)^{k₁}·d₁⋯d_{k₁}`.
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k₁+k₂.
pub fn betti_several_blocks_mixed_bound(
    d: &IntVector,
    k2: usize,
    ell: usize,
) -> Result<BigInt, ChiError> {
    let k1 = d.len();
    let k = k1 + k2;
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k₁+k₂; got ℓ = {ell}, k₁+k₂ = {k}"
        )));
    }
    let kb = BigInt::from(k as u64);
    let product: BigInt = d.iter().product();
    let main = BigInt::from(ell as u64)
        * BigInt::from(2u64).pow(ell as u32)
        * factorial(k1)
        * kb.pow(ell as u32 - 1)
        * (BigInt::from(2) * &kb + BigInt::one()).pow(k1 as u32)
        * product;
    Ok(BigInt::from(2) + parity_term(k, ell) + main)
}

/// The literal alternating assignment-count expansion for ℓ generic
/// polynomials with box supports given by the rows of `d` (ℓ×k):
/// `1 + (−1)^{k−ℓ+1} + Σ_{j=ℓ}^{k} Σ_{|J|=j} (−1)^{k−j} Σ_{α>0,|α|=j}
///  n_refined(d_J, α)`.
///
/// This is evaluated exactly as written; it is *not* asserted equal to the
/// engine value on box supports (the two differ by per-term multinomial
/// factors — see the workspace tests, which record the difference).
///
/// # Errors
/// [`ChiError::Hypothesis`] unless 1 ≤ ℓ ≤ k.
pub fn betti_boxes_generic(d: &IntMatrix) -> Result<BigInt, ChiError> {
    let ell = d.rows();
    let k = d.cols();
    if ell < 1 || ell > k {
        return Err(ChiError::Hypothesis(format!(
            "need 1 ≤ ℓ ≤ k; got ℓ = {ell}, k = {k}"
        )));
    }
    let mut total = BigInt::one() + parity_term(k, ell);
    for mask in 0..1u64 << k {
        let j = mask.count_ones() as usize;
        if j < ell {
            continue;
        }
        let cols: Vec<usize> = (0..k).filter(|&c| mask >> c & 1 == 1).collect();
        let dj = d.select_cols(&cols);
        let sign = if (k - j) % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        for alpha in positive_compositions(j, ell) {
            let alpha: Vec<u64> = alpha.iter().map(|&a| a as u64).collect();
            total += &sign * n_refined(&dj, &IntVector::from_u64s(&alpha))?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_u64(entries: &[u64]) -> IntVector {
        IntVector::from_u64s(entries)
    }

    #[test]
    fn test_total_distinct_collapses_at_extremes() {
        // ℓ = k → Π d_i.
        assert_eq!(
            betti_ci_total_distinct(3, &vec_u64(&[2, 3, 4])).unwrap(),
            BigInt::from(24)
        );
        // ℓ = 1 → 1 + (d−1)^k.
        for k in 1..=6usize {
            for d in 1..=5u64 {
                assert_eq!(
                    betti_ci_total_distinct(k, &vec_u64(&[d])).unwrap(),
                    BigInt::one() + BigInt::from(d - 1).pow(k as u32),
                    "k={k} d={d}"
                );
            }
        }
    }

    #[test]
    fn test_total_distinct_hypothesis_checks() {
        assert!(betti_ci_total_distinct(2, &vec_u64(&[2, 2, 2])).is_err());
        assert!(betti_ci_total_distinct(3, &vec_u64(&[2, 0])).is_err());
    }

    #[test]
    fn test_one_multi_pinned_values() {
        assert_eq!(betti_one_multi(&vec_u64(&[2, 2])).unwrap(), BigInt::from(6));
        assert_eq!(betti_one_multi(&vec_u64(&[5])).unwrap(), BigInt::from(5));
        // k=2, d=(d,d) → 2d²−2d+2.
        for d in 0..=6i64 {
            assert_eq!(
                betti_one_multi(&vec_u64(&[d as u64, d as u64])).unwrap(),
                BigInt::from(2 * d * d - 2 * d + 2)
            );
        }
    }

    #[test]
    fn test_blocks_bound_single_block() {
        // p=1: 1 + (−1)^{k−ℓ+1} + (k−ℓ+2)²binom(k,ℓ−1)(kᵢ!/k!)·2^{3k−ℓ+1}/3·d^k.
        let v = betti_blocks_bound(&vec_u64(&[2]), &vec_u64(&[3]), 1).unwrap();
        // k=2, ℓ=1: 1 + 1 + 9·1·1·(2^6/3)·9 = 2 + 9·64·3 = 1730.
        assert_eq!(v, BigRational::from_integer(BigInt::from(1730)));
    }

    #[test]
    fn test_blocks_bound_is_rational_in_general() {
        // p=2, k=(1,1), d=(2,2), ℓ=1: 2 + 9·1·(1/2)·(3^6/8)·4 = 2 + 6561/4.
        let v = betti_blocks_bound(&vec_u64(&[1, 1]), &vec_u64(&[2, 2]), 1).unwrap();
        assert_eq!(
            v,
            BigRational::new(BigInt::from(6569), BigInt::from(4))
        );
    }

    #[test]
    fn test_partially_quadratic_bound_pinned() {
        // ℓ=1, k1=1, k2=2, d=2 → 2 − 1 + 2·13 = 27.
        assert_eq!(
            betti_partially_quadratic_bound(2, 1, 2, 1).unwrap(),
            BigInt::from(27)
        );
    }

    #[test]
    fn test_inner_f_binomial_theorem_check() {
        // inner_F(0, k₂) with ℓ=1 reduces to (1−2)^{k₂}.
        for k2 in 0..=8usize {
            assert_eq!(
                inner_f(0, k2, 1),
                BigInt::from(-1).pow(k2 as u32),
                "k2={k2}"
            );
        }
    }

    #[test]
    fn test_several_blocks_mixed_pinned() {
        // ℓ=1, k1=1, k2=1, d=(2): 2 + 1 + 1·2·1·1·5·2 = 23.
        assert_eq!(
            betti_several_blocks_mixed_bound(&vec_u64(&[2]), 1, 1).unwrap(),
            BigInt::from(23)
        );
    }

    #[test]
    fn test_boxes_generic_column_symmetry() {
        let d = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 1, 1]]);
        let permuted = IntMatrix::from_rows(&[vec![3, 1, 2], vec![1, 2, 1]]);
        assert_eq!(
            betti_boxes_generic(&d).unwrap(),
            betti_boxes_generic(&permuted).unwrap()
        );
    }

    #[test]
    fn test_boxes_generic_single_row_shape() {
        // ℓ=1: the α-sum is trivial and the formula is the one-multi
        // alternating shape without the j! weights.
        for k in 1..=3usize {
            let row: Vec<u64> = (1..=k as u64 + 1).collect();
            let d = IntMatrix::from_rows(&[row.clone()]);
            let got = betti_boxes_generic(&d).unwrap();

            let mut expected = BigInt::one() + parity_term(k, 1);
            for mask in 1u64..1 << k {
                let j = mask.count_ones() as usize;
                let sign = if (k - j) % 2 == 0 {
                    BigInt::one()
                } else {
                    BigInt::from(-1)
                };
                let prod: BigInt = (0..k)
                    .filter(|&c| mask >> c & 1 == 1)
                    .map(|c| BigInt::from(row[c]))
                    .product();
                expected += sign * prod;
            }
            assert_eq!(got, expected, "k={k}");
        }
    }
}
