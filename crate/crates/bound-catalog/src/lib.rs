//! A catalog of exact Betti-number bounds for real algebraic and
//! semi-algebraic sets.
//!
//! Every evaluator takes the combinatorial data of a defining system
//! (degrees, block sizes, counts of sign-condition polynomials) and
//! returns a [`BoundResult`]: the bound's exact rational value together
//! with the catalog id it came from, the hypotheses that were verified,
//! the arm of a min that produced the value (when there is one), and
//! whether the formula is integer-valued by construction.
//!
//! The families:
//! - [`total_degree_variety_bound`] and the classical baselines in
//!   [`ClassicBound`] for one common total degree;
//! - [`block_variety_bound`]/[`block_semi_bounds`] for one degree per
//!   block of variables;
//! - [`box_variety_bound`]/[`box_semi_bounds`] for per-variable degree
//!   boxes, built on refined monomial counts;
//! - [`mixed_quadratic_variety_bound`] and relatives for systems
//!   quadratic outside one block, including projective quadrics and the
//!   two-family sign-condition bound;
//! - [`multi_quadratic_variety_bound`] for individual variable degrees
//!   plus a quadratic block;
//! - [`two_degree_variety_bound`] and relatives for systems mixing two
//!   total degrees.
//!
//! All arithmetic is exact: values are arbitrary-precision rationals and
//! no floating point is used anywhere.

mod blocks;
mod boxes;
mod classic;
mod error;
mod multi_quadratic;
mod quadratic;
mod registry;
mod result;
mod total_degree;
mod two_degrees;

pub use blocks::{block_generic_term, block_semi_bounds, block_variety_bound};
pub use boxes::{box_generic_core, box_semi_bounds, box_variety_bound};
pub use classic::{classic_bound, ClassicBound};
pub use error::BoundError;
pub use multi_quadratic::{
    multi_quadratic_semi_bounds, multi_quadratic_term, multi_quadratic_variety_bound,
};
pub use quadratic::{
    mixed_quadratic_semi_bounds, mixed_quadratic_term, mixed_quadratic_variety_bound,
    projective_quadrics_bound, projective_quadrics_term, two_family_quadratic_bounds,
};
pub use registry::{catalog, lookup, CatalogEntry};
pub use result::BoundResult;
pub use total_degree::{
    f1, f2, leading_coefficient_comparison, round_up_even, total_degree_variety_bound,
};
pub use two_degrees::{
    refined_f, sign_components_two_degree_bound, two_degree_semi_bounds,
    two_degree_simple_form, two_degree_variety_bound, DegreeReading,
};
