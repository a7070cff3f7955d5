//! Betti-number bounds for images and preimages of semi-algebraic sets
//! under polynomial maps.
//!
//! Every evaluator reduces its scenario to block-structured data: a map
//! `R^k -> R^m` contributes `j + 1` source blocks of size `k` (one per
//! factor of a fibered power) plus one target block of size `m`, with the
//! source degree `d` on the source blocks and the secondary degree on the
//! target block. The four scenarios differ in how many fibered powers are
//! summed, how many polynomials the construction carries, and the span of
//! the outer position/subset sum:
//!
//! - [`pull_back_bound`] — preimage of a closed set: one product, `m + s`
//!   polynomials.
//! - [`image_bound`] — image of a bounded closed set: fibered powers
//!   `0..=i`, `(j+1)(m+s)` polynomials each.
//! - [`fourier_mukai_bound`] — second-factor projection of
//!   `(preimage of S1) ∩ S2`: fibered powers `0..=i` with `(j+1)(s1+s2)`
//!   polynomials and an enlarged index span `(j+1)(k+m) + k`.
//! - [`transversal_bound`] — spaces of affine subspaces meeting a bounded
//!   set, via a quadratic symmetric-matrix model of the subspace family.
//!
//! All arithmetic is exact; results are [`bound_catalog::BoundResult`]s
//! with citations `pull-back`, `image`, `fourier-mukai`, `transversal`.

mod bounds;
mod scenario;

pub use bounds::{
    fourier_mukai_bound, image_bound, pull_back_bound, scenario_bound, transversal_bound,
};
pub use scenario::{scenario_catalog, transversal_ambient_dim, MapScenario};
