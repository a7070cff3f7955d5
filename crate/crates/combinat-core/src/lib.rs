//! Exact arbitrary-precision scalars and combinatorial primitives.
//!
//! Everything downstream (mixed volumes, Euler characteristics, bound
//! evaluators) is built from the handful of functions in this crate:
//! factorials, binomial/multinomial coefficients, complete homogeneous
//! symmetric polynomials, contingency-table counts, and one alternating
//! binomial sum. All values are exact — `BigInt` for integer-valued
//! quantities, reduced `BigRational` ([`ExactScalar`]) everywhere else.
//! No floating point appears anywhere in this workspace's results.

mod alternating;
mod binomial;
mod contingency;
mod error;
mod factorial;
mod scalar;
mod symmetric;

pub use alternating::alternating_binomial;
pub use binomial::{binomial, binomial_general, multinomial};
pub use contingency::contingency_count;
pub use error::CombinatError;
pub use factorial::{factorial, falling_factorial};
pub use scalar::{
    parse_scalar, render_scalar, scalar_from_int, scalar_ratio, ExactScalar, IntMatrix, IntVector,
};
pub use symmetric::complete_homogeneous;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
