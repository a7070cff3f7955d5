//! Axis-aligned Newton-polytope families and their exact (mixed) volumes.
//!
//! The polytopes handled here are the ones that arise as supports of the
//! polynomial systems this workspace evaluates: scaled standard simplices on
//! a subset of coordinates, axis-aligned boxes, products of simplices over
//! disjoint coordinate blocks, and Minkowski sums of those. Every supported
//! family admits a closed-form volume, so no vertex or halfspace geometry is
//! needed — polytopes stay purely combinatorial descriptions.
//!
//! Mixed volumes come from two independent routes that the test suite plays
//! against each other:
//! - [`mixed_volume`]: per-family closed forms (identical bodies → volume,
//!   boxes → permanent, simplices → degree product, block products →
//!   coefficient convolution);
//! - [`mixed_volume_oracle_interpolation`]: finite differences of the volume
//!   polynomial `vol(λ₁K₁+⋯+λ_mK_m)` on an integer λ-grid.
//!
//! With the `parallel` feature (on by default) the heavy enumeration kernels
//! run on rayon; the sequential fallbacks are always compiled. Both paths
//! sum the same exact integers and rationals, so results are bit-identical.

mod boxes;
mod error;
mod family;
mod oracle;
mod permanent;
mod query;

pub use boxes::{n_coarse_bound, n_refined};
pub use error::MvError;
pub use family::Polytope;
pub use oracle::mixed_volume_oracle_interpolation;
#[cfg(feature = "parallel")]
pub use oracle::mixed_volume_oracle_par;
pub use oracle::mixed_volume_oracle_seq;
pub use permanent::permanent_seq;
#[cfg(feature = "parallel")]
pub use permanent::permanent_par;
pub use permanent::permanent;
pub use query::{mixed_volume, MixedVolumeQuery};
