//! Complete homogeneous symmetric polynomials.

use num_bigint::BigInt;
use num_traits::One;

/// `h_j(d₁,…,d_ℓ)`: the complete homogeneous symmetric polynomial of degree
/// `j`, i.e. the sum of `d^α` over all exponent vectors `α ≥ 0` with
/// `|α| = j`.
///
/// Computed by the standard one-variable-at-a-time recursion
/// `h_j(d₁,…,d_ℓ) = h_j(d₁,…,d_{ℓ−1}) + d_ℓ·h_{j−1}(d₁,…,d_ℓ)`,
/// which the DP below applies in place. `h_0 = 1` for any argument list,
/// including the empty one; `h_j() = 0` for `j ≥ 1`.
pub fn complete_homogeneous(j: usize, d: &[BigInt]) -> BigInt {
    let mut h = vec![BigInt::ZERO; j + 1];
    h[0] = BigInt::one();
    for x in d {
        for t in 1..=j {
            let add = x * &h[t - 1];
            h[t] += add;
        }
    }
    h.pop().expect("vector has j+1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: enumerate all exponent vectors explicitly.
    fn h_by_enumeration(j: usize, d: &[BigInt]) -> BigInt {
        fn rec(j: usize, d: &[BigInt]) -> BigInt {
            match d.split_first() {
                None => {
                    if j == 0 {
                        BigInt::one()
                    } else {
                        BigInt::ZERO
                    }
                }
                Some((first, rest)) => {
                    let mut total = BigInt::ZERO;
                    let mut power = BigInt::one();
                    for a in 0..=j {
                        total += &power * rec(j - a, rest);
                        if a < j {
                            power *= first;
                        }
                    }
                    total
                }
            }
        }
        rec(j, d)
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn test_h_base_cases() {
        assert_eq!(complete_homogeneous(0, &ints(&[7, 9])), BigInt::one());
        assert_eq!(complete_homogeneous(0, &[]), BigInt::one());
        assert_eq!(complete_homogeneous(3, &[]), BigInt::ZERO);
        assert_eq!(complete_homogeneous(1, &ints(&[2, 3])), BigInt::from(5));
        // 2² + 2·3 + 3² = 19
        assert_eq!(complete_homogeneous(2, &ints(&[2, 3])), BigInt::from(19));
    }

    #[test]
    fn test_h_matches_enumeration_oracle() {
        let grids: &[&[i64]] = &[&[2], &[2, 3], &[1, 4, 2], &[3, 3, 3], &[0, 2, 5, 1]];
        for d in grids {
            let d = ints(d);
            for j in 0..=5 {
                assert_eq!(
                    complete_homogeneous(j, &d),
                    h_by_enumeration(j, &d),
                    "h_{j}({d:?})"
                );
            }
        }
    }

    #[test]
    fn test_h_single_variable_is_power() {
        for d in 0..6i64 {
            for j in 0..6u32 {
                assert_eq!(
                    complete_homogeneous(j as usize, &ints(&[d])),
                    BigInt::from(d).pow(j)
                );
            }
        }
    }
}
