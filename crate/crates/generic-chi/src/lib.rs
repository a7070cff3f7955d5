//! Exact Euler characteristics and total Z₂-Betti numbers of generic
//! complete intersections, from their Newton polytopes.
//!
//! The centerpiece is [`chi_khovanskii`]: χ of a generic affine zero set as
//! an alternating sum of mixed volumes of coordinate faces of the supports.
//! Around it sit the closed forms it is tested against — total-degree
//! complete intersections, multi-degree hypersurfaces, quadric systems
//! (affine and projective), block and partially quadratic bounds — plus an
//! independent Chern-class route to the same χ ([`chern_chi_projective`],
//! [`lefschetz_chi_affine`]).
//!
//! Everything is exact integer/rational arithmetic. Every value for a
//! complex zero set doubles as an upper bound for the corresponding real
//! one (Smith inequality); [`ChiReport`] carries that flag. With the
//! `parallel` feature (on by default) the face-subset enumeration runs on
//! rayon with bit-identical results.

mod betti;
mod chern;
mod closed_forms;
mod error;
mod khovanskii;
mod quadrics;
mod system;

pub use betti::betti_generic;
pub use chern::{chern_chi_projective, lefschetz_chi_affine};
pub use closed_forms::{
    betti_blocks_bound, betti_boxes_generic, betti_ci_total_distinct, betti_one_multi,
    betti_partially_quadratic_bound, betti_several_blocks_mixed_bound, inner_f,
};
pub use error::ChiError;
pub use khovanskii::chi_khovanskii;
#[doc(hidden)]
pub use khovanskii::chi_khovanskii_enumerated;
#[cfg(feature = "parallel")]
pub use khovanskii::chi_khovanskii_par;
pub use khovanskii::chi_khovanskii_seq;
pub use quadrics::{quadrics_affine_chi, quadrics_b, quadrics_projective};
pub use system::{ChiReport, GenericSystem, Setting};
