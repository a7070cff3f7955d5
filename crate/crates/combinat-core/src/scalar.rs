//! The exact scalar type and small integer vector/matrix containers.

use crate::error::CombinatError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar: a canonical reduced fraction with positive
/// denominator. `BigRational` maintains exactly that invariant (it reduces on
/// construction and keeps the sign in the numerator), so we use it directly
/// rather than wrapping it.
pub type ExactScalar = BigRational;

/// Builds an [`ExactScalar`] from a machine integer.
pub fn scalar_from_int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the exact fraction `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn scalar_ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a scalar the way every output surface in this workspace does:
/// integers as plain decimal, proper fractions as `p/q`.
///
/// The rendering round-trips through [`parse_scalar`] exactly.
pub fn render_scalar(x: &ExactScalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `render_scalar` format back into an exact scalar.
pub fn parse_scalar(s: &str) -> Result<ExactScalar, num_rational::ParseRatioError> {
    BigRational::from_str(s)
}

/// An ordered sequence of nonnegative arbitrary-precision integers.
///
/// Used for degree lists, block sizes, and multiplicity patterns. Negative
/// entries are rejected at construction so downstream formulas can assume
/// `entries >= 0` without re-checking.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    /// # Errors
    /// Returns [`CombinatError::NegativeEntry`] if any entry is negative.
    pub fn new(entries: Vec<BigInt>) -> Result<Self, CombinatError> {
        if let Some((index, value)) = entries.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(CombinatError::NegativeEntry {
                index,
                value: value.to_string(),
            });
        }
        Ok(IntVector(entries))
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64s(entries: &[u64]) -> Self {
        IntVector(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    /// Sum of all entries.
    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A rectangular array of nonnegative arbitrary-precision integers with an
/// explicit shape, stored row-major. Used for per-polynomial degree patterns
/// (one row per polynomial, one column per variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// # Errors
    /// Returns [`CombinatError::ShapeMismatch`] if `data.len() != rows*cols`
    /// and [`CombinatError::NegativeEntry`] on any negative entry.
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, CombinatError> {
        if data.len() != rows * cols {
            return Err(CombinatError::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some((index, value)) = data.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(CombinatError::NegativeEntry {
                index,
                value: value.to_string(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Convenience constructor from machine-integer rows.
    ///
    /// # Panics
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows passed to IntMatrix::from_rows"
        );
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&e| BigInt::from(e)))
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        assert!(row < self.rows, "row index out of bounds");
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    /// New matrix keeping only the listed rows, in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> IntMatrix {
        let data = keep
            .iter()
            .flat_map(|&r| self.row(r).iter().cloned())
            .collect();
        IntMatrix {
            rows: keep.len(),
            cols: self.cols,
            data,
        }
    }

    /// New matrix keeping only the listed columns, in the given order.
    pub fn select_cols(&self, keep: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for r in 0..self.rows {
            for &c in keep {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    /// Stacks `self` on top of `other` (both must have the same column count).
    ///
    /// # Panics
    /// Panics on a column-count mismatch.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.cols,
            "cannot stack matrices with different column counts"
        );
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map(&self, f: impl Fn(&BigInt) -> BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_render_integer_and_fraction() {
        assert_eq!(render_scalar(&scalar_from_int(18)), "18");
        assert_eq!(render_scalar(&scalar_ratio(1, 2)), "1/2");
        assert_eq!(render_scalar(&scalar_ratio(-3, 6)), "-1/2");
    }

    #[test]
    fn test_render_round_trips() {
        for s in ["0", "7", "-12", "3/4", "-95/8"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(render_scalar(&v), s);
        }
    }

    #[test]
    fn test_int_vector_rejects_negative() {
        let err = IntVector::new(vec![BigInt::from(1), BigInt::from(-2)]).unwrap_err();
        assert!(matches!(err, CombinatError::NegativeEntry { index: 1, .. }));
    }

    #[test]
    fn test_matrix_shape_and_selection() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(m.get(1, 2), &BigInt::from(6));
        let sub = m.select_cols(&[0, 2]);
        assert_eq!(sub.cols(), 2);
        assert_eq!(sub.get(1, 1), &BigInt::from(6));
        let stacked = m.stack(&m);
        assert_eq!(stacked.rows(), 4);
        assert_eq!(stacked.row(3), m.row(1));
    }

    #[test]
    fn test_matrix_shape_mismatch() {
        let err = IntMatrix::new(2, 2, vec![BigInt::from(1)]).unwrap_err();
        assert_eq!(
            err,
            CombinatError::ShapeMismatch {
                rows: 2,
                cols: 2,
                len: 1
            }
        );
    }
}
