//! The second, independent mixed-volume route: evaluate the volume of
//! λ-weighted Minkowski sums on a small integer grid and extract the
//! multilinear coefficient with finite differences.
//!
//! `vol(λ₁K₁+⋯+λ_mK_m)` is a polynomial of total degree m in λ, so its
//! λ₁⋯λ_m coefficient equals the m-fold mixed difference at the base point
//! (1,…,1): `Σ_{S⊆[m]} (−1)^{m−|S|} vol(Σ_s (1+[s∈S])·K_s)`. Every
//! evaluation point lies in {1,2}^m and every evaluated body is a Minkowski
//! sum of dilates of the inputs, which the closed-form volume handles
//! whenever the inputs share a family. This route never touches the
//! permanent/monomial/convolution strategies of `mixed_volume`.

use crate::error::MvError;
use crate::family::Polytope;
use crate::query::MixedVolumeQuery;
use combinat_core::factorial;
use num_bigint::BigInt;
use num_rational::BigRational;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest slot count worth splitting the 2^m subset loop across threads.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 10;

/// Expands multiplicities into one body index per λ slot.
fn slot_owners(q: &MixedVolumeQuery) -> Vec<usize> {
    let mut owners = Vec::with_capacity(q.order());
    for (i, &mu) in q.multiplicities().iter().enumerate() {
        owners.extend(std::iter::repeat_n(i, mu));
    }
    owners
}

/// One finite-difference term: `(−1)^{m−|S|} · vol(Σ_i c_i·K_i)` with
/// `c_i = μ_i + |slots of i ∩ S|`.
fn difference_term(q: &MixedVolumeQuery, owners: &[usize], subset: u64) -> Result<BigRational, MvError> {
    let m = owners.len();
    let mut coeff: Vec<usize> = q.multiplicities().to_vec();
    for (s, &owner) in owners.iter().enumerate() {
        if subset >> s & 1 == 1 {
            coeff[owner] += 1;
        }
    }
    let scaled: Vec<Polytope> = q
        .bodies()
        .iter()
        .zip(&coeff)
        .map(|(body, &c)| body.scale(&BigInt::from(c)))
        .collect();
    let vol = Polytope::minkowski_sum(scaled)?.volume()?;
    if (m as u32 - subset.count_ones()) % 2 == 1 {
        Ok(-vol)
    } else {
        Ok(vol)
    }
}

fn finish(m: usize, acc: BigRational) -> BigRational {
    acc / BigRational::from_integer(factorial(m))
}

/// Mixed volume by grid evaluation and finite differences, single-threaded.
///
/// # Errors
/// [`MvError::Shape`] if the order is ≥ 64; [`MvError::Unsupported`] when a
/// λ-weighted Minkowski sum of the bodies has no closed-form volume (the
/// bodies straddle families).
pub fn mixed_volume_oracle_seq(q: &MixedVolumeQuery) -> Result<BigRational, MvError> {
    let m = q.order();
    if m >= 64 {
        return Err(MvError::Shape(format!(
            "oracle order {m} exceeds the subset-enumeration range"
        )));
    }
    let owners = slot_owners(q);
    let mut acc = BigRational::from_integer(BigInt::ZERO);
    for subset in 0..1u64 << m {
        acc += difference_term(q, &owners, subset)?;
    }
    Ok(finish(m, acc))
}

/// Mixed volume by grid evaluation and finite differences, with the subset
/// loop split across threads. Exact rational addition is order-independent,
/// so the result is bit-identical to [`mixed_volume_oracle_seq`].
///
/// # Errors
/// As [`mixed_volume_oracle_seq`].
#[cfg(feature = "parallel")]
pub fn mixed_volume_oracle_par(q: &MixedVolumeQuery) -> Result<BigRational, MvError> {
    let m = q.order();
    if m >= 64 {
        return Err(MvError::Shape(format!(
            "oracle order {m} exceeds the subset-enumeration range"
        )));
    }
    if m < PAR_THRESHOLD {
        return mixed_volume_oracle_seq(q);
    }
    let owners = slot_owners(q);
    let terms: Result<Vec<BigRational>, MvError> = (0..1u64 << m)
        .into_par_iter()
        .map(|subset| difference_term(q, &owners, subset))
        .collect();
    Ok(finish(m, terms?.into_iter().sum()))
}

/// Mixed volume by grid evaluation and finite differences, using the
/// parallel kernel when the `parallel` feature is enabled.
///
/// # Errors
/// As [`mixed_volume_oracle_seq`].
pub fn mixed_volume_oracle_interpolation(q: &MixedVolumeQuery) -> Result<BigRational, MvError> {
    #[cfg(feature = "parallel")]
    {
        mixed_volume_oracle_par(q)
    }
    #[cfg(not(feature = "parallel"))]
    {
        mixed_volume_oracle_seq(q)
    }
}
