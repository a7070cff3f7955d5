//! Polytope descriptions: scaled simplices, axis boxes, block products,
//! Minkowski sums — plus faces, scaling, canonicalization, and volume.

use crate::error::MvError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use combinat_core::factorial;

/// A combinatorial description of an axis-aligned lattice polytope in
/// `R^ambient`, always contained in the nonnegative orthant and containing
/// the origin. Variable indices are 0-based.
///
/// - `Simplex`: `degree · Δ` on the listed coordinates (`{x ≥ 0 : Σ_{i∈vars}
///   x_i ≤ degree, x_j = 0 otherwise}`).
/// - `AxisBox`: `Π_j [0, sides[j]]`, one side per ambient coordinate.
/// - `BlockProduct`: a product of scaled simplices over pairwise-disjoint
///   coordinate blocks; coordinates not covered by any block are pinned to 0.
/// - `Sum`: a Minkowski sum of members sharing the same ambient dimension.
///
/// Construct through the checked constructors ([`Polytope::simplex`] etc.);
/// the enum is public for matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Polytope {
    Simplex {
        ambient: usize,
        degree: BigInt,
        vars: Vec<usize>,
    },
    AxisBox {
        sides: Vec<BigInt>,
    },
    BlockProduct {
        ambient: usize,
        blocks: Vec<(Vec<usize>, BigInt)>,
    },
    Sum {
        ambient: usize,
        members: Vec<Polytope>,
    },
}

impl Polytope {
    /// Scaled simplex `degree·Δ` on the given coordinates.
    ///
    /// # Errors
    /// [`MvError::Shape`] if a variable index repeats or exceeds the ambient
    /// dimension, or the degree is negative.
    pub fn simplex(
        ambient: usize,
        degree: impl Into<BigInt>,
        vars: &[usize],
    ) -> Result<Polytope, MvError> {
        let degree = degree.into();
        if degree.is_negative() {
            return Err(MvError::Shape(format!("negative simplex degree {degree}")));
        }
        let vars = checked_var_set(ambient, vars)?;
        Ok(Polytope::Simplex {
            ambient,
            degree,
            vars,
        })
    }

    /// Scaled simplex on *all* coordinates of `R^ambient`.
    pub fn full_simplex(ambient: usize, degree: impl Into<BigInt>) -> Polytope {
        Polytope::simplex(ambient, degree, &(0..ambient).collect::<Vec<_>>())
            .expect("full variable set is always valid")
    }

    /// Axis-aligned box with the given sides (one per coordinate).
    ///
    /// # Errors
    /// [`MvError::Shape`] on a negative side.
    pub fn axis_box(sides: Vec<BigInt>) -> Result<Polytope, MvError> {
        if let Some(s) = sides.iter().find(|s| s.is_negative()) {
            return Err(MvError::Shape(format!("negative box side {s}")));
        }
        Ok(Polytope::AxisBox { sides })
    }

    /// Convenience box constructor from machine integers.
    pub fn axis_box_u64(sides: &[u64]) -> Polytope {
        Polytope::AxisBox {
            sides: sides.iter().map(|&s| BigInt::from(s)).collect(),
        }
    }

    /// Product of scaled simplices over disjoint coordinate blocks.
    ///
    /// # Errors
    /// [`MvError::Shape`] if blocks overlap, reference out-of-range
    /// coordinates, or carry negative degrees.
    pub fn block_product(
        ambient: usize,
        blocks: &[(Vec<usize>, u64)],
    ) -> Result<Polytope, MvError> {
        let mut seen = vec![false; ambient];
        let mut checked = Vec::with_capacity(blocks.len());
        for (vars, degree) in blocks {
            let vars = checked_var_set(ambient, vars)?;
            for &v in &vars {
                if seen[v] {
                    return Err(MvError::Shape(format!(
                        "variable {v} appears in more than one block"
                    )));
                }
                seen[v] = true;
            }
            checked.push((vars, BigInt::from(*degree)));
        }
        Ok(Polytope::BlockProduct {
            ambient,
            blocks: checked,
        })
    }

    /// Minkowski sum of the members.
    ///
    /// # Errors
    /// [`MvError::Shape`] if the list is empty or ambient dimensions differ.
    pub fn minkowski_sum(members: Vec<Polytope>) -> Result<Polytope, MvError> {
        let ambient = members
            .first()
            .ok_or_else(|| MvError::Shape("empty Minkowski sum".into()))?
            .ambient();
        if let Some(bad) = members.iter().find(|m| m.ambient() != ambient) {
            return Err(MvError::Shape(format!(
                "Minkowski sum member has ambient {} but expected {ambient}",
                bad.ambient()
            )));
        }
        Ok(Polytope::Sum { ambient, members })
    }

    /// The single point at the origin of `R^ambient`.
    pub fn point(ambient: usize) -> Polytope {
        Polytope::AxisBox {
            sides: vec![BigInt::ZERO; ambient],
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            Polytope::Simplex { ambient, .. }
            | Polytope::BlockProduct { ambient, .. }
            | Polytope::Sum { ambient, .. } => *ambient,
            Polytope::AxisBox { sides } => sides.len(),
        }
    }

    /// The face obtained by setting the listed coordinates to zero, living in
    /// the remaining coordinates (which are renumbered consecutively).
    ///
    /// # Errors
    /// [`MvError::Shape`] if an index is out of range.
    pub fn face_at_zero(&self, zeroed: &[usize]) -> Result<Polytope, MvError> {
        let ambient = self.ambient();
        let zeroed = checked_var_set(ambient, zeroed)?;
        // old index -> new index for surviving coordinates
        let mut renumber = vec![usize::MAX; ambient];
        let mut next = 0;
        for v in 0..ambient {
            if !zeroed.contains(&v) {
                renumber[v] = next;
                next += 1;
            }
        }
        let new_ambient = next;
        let survive = |vars: &[usize]| -> Vec<usize> {
            vars.iter()
                .filter(|&&v| renumber[v] != usize::MAX)
                .map(|&v| renumber[v])
                .collect()
        };

        Ok(match self {
            Polytope::Simplex { degree, vars, .. } => Polytope::Simplex {
                ambient: new_ambient,
                degree: degree.clone(),
                vars: survive(vars),
            },
            Polytope::AxisBox { sides } => Polytope::AxisBox {
                sides: sides
                    .iter()
                    .enumerate()
                    .filter(|(v, _)| renumber[*v] != usize::MAX)
                    .map(|(_, s)| s.clone())
                    .collect(),
            },
            Polytope::BlockProduct { blocks, .. } => Polytope::BlockProduct {
                ambient: new_ambient,
                blocks: blocks
                    .iter()
                    .map(|(vars, d)| (survive(vars), d.clone()))
                    .filter(|(vars, _)| !vars.is_empty())
                    .collect(),
            },
            Polytope::Sum { members, .. } => Polytope::Sum {
                ambient: new_ambient,
                members: members
                    .iter()
                    .map(|m| m.face_at_zero(zeroed.as_slice()))
                    .collect::<Result<_, _>>()?,
            },
        })
    }

    /// The dilate `c·P` (all degrees/sides multiplied by `c ≥ 0`).
    pub fn scale(&self, c: &BigInt) -> Polytope {
        match self {
            Polytope::Simplex {
                ambient,
                degree,
                vars,
            } => Polytope::Simplex {
                ambient: *ambient,
                degree: degree * c,
                vars: vars.clone(),
            },
            Polytope::AxisBox { sides } => Polytope::AxisBox {
                sides: sides.iter().map(|s| s * c).collect(),
            },
            Polytope::BlockProduct { ambient, blocks } => Polytope::BlockProduct {
                ambient: *ambient,
                blocks: blocks.iter().map(|(v, d)| (v.clone(), d * c)).collect(),
            },
            Polytope::Sum { ambient, members } => Polytope::Sum {
                ambient: *ambient,
                members: members.iter().map(|m| m.scale(c)).collect(),
            },
        }
    }

    /// Structural normal form: equal polytopes (as sets) within the supported
    /// families compare equal after canonicalization.
    ///
    /// Rules: a simplex on ≤ 1 variables or of degree 0 becomes a box; block
    /// products expand degree-0 and singleton blocks into box sides, and
    /// collapse to `AxisBox`/`Simplex` when only those shapes remain;
    /// Minkowski sums are flattened and merged whenever all members share one
    /// coordinate partition (sides/degrees add blockwise), which covers sums
    /// of boxes, of equal-shape simplices, and of same-partition products.
    pub fn canonical(&self) -> Polytope {
        match self {
            Polytope::Simplex {
                ambient,
                degree,
                vars,
            } => {
                if vars.len() >= 2 && !degree.is_zero() {
                    self.clone()
                } else {
                    // Point or axis segment: a (degenerate) box.
                    let mut sides = vec![BigInt::ZERO; *ambient];
                    if let [v] = vars[..] {
                        sides[v] = degree.clone();
                    }
                    Polytope::AxisBox { sides }
                }
            }
            Polytope::AxisBox { .. } => self.clone(),
            Polytope::BlockProduct { ambient, blocks } => {
                rebuild_from_partition(*ambient, blocks.clone())
            }
            Polytope::Sum { ambient, members } => {
                let mut flat = Vec::new();
                for m in members {
                    match m.canonical() {
                        Polytope::Sum { members: inner, .. } => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                // The origin is the Minkowski identity.
                flat.retain(|m| !m.is_point());
                match flat.len() {
                    0 => Polytope::point(*ambient),
                    1 => flat.pop().expect("one member"),
                    _ => merge_sum(*ambient, flat),
                }
            }
        }
    }

    /// True if the polytope is the single point at the origin.
    fn is_point(&self) -> bool {
        match self {
            Polytope::AxisBox { sides } => sides.iter().all(Zero::is_zero),
            Polytope::Simplex { degree, vars, .. } => degree.is_zero() || vars.is_empty(),
            Polytope::BlockProduct { blocks, .. } => {
                blocks.iter().all(|(v, d)| d.is_zero() || v.is_empty())
            }
            Polytope::Sum { members, .. } => members.iter().all(Polytope::is_point),
        }
    }

    /// The full coordinate partition with one entry per block — including
    /// degree-0 singletons for uncovered coordinates — or `None` for an
    /// irreducible Minkowski sum. Two polytopes with identical partition key
    /// sets differ only in their degrees, which is exactly when Minkowski
    /// sums merge blockwise and mixed volumes factor blockwise.
    pub(crate) fn full_partition(&self) -> Option<Vec<(Vec<usize>, BigInt)>> {
        let ambient = self.ambient();
        let mut parts: Vec<(Vec<usize>, BigInt)> = match self.canonical() {
            Polytope::AxisBox { sides } => sides
                .iter()
                .enumerate()
                .map(|(v, s)| (vec![v], s.clone()))
                .collect(),
            Polytope::Simplex { degree, vars, .. } => {
                let mut parts = vec![(vars.clone(), degree)];
                parts.extend(
                    (0..ambient)
                        .filter(|v| !vars.contains(v))
                        .map(|v| (vec![v], BigInt::ZERO)),
                );
                parts
            }
            Polytope::BlockProduct { blocks, .. } => {
                let covered: Vec<usize> = blocks.iter().flat_map(|(v, _)| v.clone()).collect();
                let mut parts = blocks;
                parts.extend(
                    (0..ambient)
                        .filter(|v| !covered.contains(v))
                        .map(|v| (vec![v], BigInt::ZERO)),
                );
                parts
            }
            Polytope::Sum { .. } => return None,
        };
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        Some(parts)
    }

    /// Exact `ambient`-dimensional volume.
    ///
    /// # Errors
    /// [`MvError::Unsupported`] for an irreducible Minkowski sum (a sum whose
    /// members do not share one coordinate partition) — those have no
    /// closed-form volume here.
    pub fn volume(&self) -> Result<BigRational, MvError> {
        let ambient = self.ambient();
        if ambient == 0 {
            return Ok(BigRational::one());
        }
        match self.canonical() {
            Polytope::AxisBox { sides } => Ok(BigRational::from_integer(
                sides.iter().product::<BigInt>(),
            )),
            Polytope::Simplex { degree, vars, .. } => {
                if vars.len() < ambient {
                    Ok(BigRational::zero())
                } else {
                    Ok(BigRational::new(
                        degree.pow(ambient as u32),
                        factorial(ambient),
                    ))
                }
            }
            Polytope::BlockProduct { blocks, .. } => {
                let covered: usize = blocks.iter().map(|(v, _)| v.len()).sum();
                if covered < ambient {
                    return Ok(BigRational::zero());
                }
                let mut vol = BigRational::one();
                for (vars, d) in &blocks {
                    vol *= BigRational::new(d.pow(vars.len() as u32), factorial(vars.len()));
                }
                Ok(vol)
            }
            Polytope::Sum { .. } => Err(MvError::Unsupported(
                "volume of a Minkowski sum whose members do not share one \
                 coordinate partition"
                    .into(),
            )),
        }
    }
}

/// Validates, sorts, and deduplicates a variable index set.
fn checked_var_set(ambient: usize, vars: &[usize]) -> Result<Vec<usize>, MvError> {
    let mut vars: Vec<usize> = vars.to_vec();
    vars.sort_unstable();
    let before = vars.len();
    vars.dedup();
    if vars.len() != before {
        return Err(MvError::Shape("duplicate variable index".into()));
    }
    if let Some(&v) = vars.iter().find(|&&v| v >= ambient) {
        return Err(MvError::Shape(format!(
            "variable index {v} out of range for ambient dimension {ambient}"
        )));
    }
    Ok(vars)
}

/// Canonical polytope from a full or partial coordinate partition: drops
/// degenerate parts, then picks the simplest equivalent shape.
fn rebuild_from_partition(ambient: usize, parts: Vec<(Vec<usize>, BigInt)>) -> Polytope {
    // Degree-0 blocks and empty blocks pin their coordinates to zero, which
    // "uncovered" already means; drop them.
    let mut live: Vec<(Vec<usize>, BigInt)> = parts
        .into_iter()
        .filter(|(v, d)| !v.is_empty() && !d.is_zero())
        .collect();
    live.sort_by(|a, b| a.0.cmp(&b.0));

    if live.is_empty() {
        return Polytope::point(ambient);
    }
    if live.iter().all(|(v, _)| v.len() == 1) {
        let mut sides = vec![BigInt::ZERO; ambient];
        for (v, d) in live {
            sides[v[0]] = d;
        }
        return Polytope::AxisBox { sides };
    }
    if let [(vars, degree)] = &live[..] {
        return Polytope::Simplex {
            ambient,
            degree: degree.clone(),
            vars: vars.clone(),
        };
    }
    Polytope::BlockProduct {
        ambient,
        blocks: live,
    }
}

/// Merges Minkowski-sum members that share one coordinate partition by
/// adding degrees blockwise; leaves an irreducible `Sum` otherwise.
fn merge_sum(ambient: usize, members: Vec<Polytope>) -> Polytope {
    let partitions: Option<Vec<Vec<(Vec<usize>, BigInt)>>> =
        members.iter().map(Polytope::full_partition).collect();
    if let Some(partitions) = partitions {
        let keys: Vec<Vec<usize>> = partitions[0].iter().map(|(v, _)| v.clone()).collect();
        if partitions
            .iter()
            .all(|p| p.iter().map(|(v, _)| v).eq(keys.iter()))
        {
            let merged = keys
                .into_iter()
                .enumerate()
                .map(|(i, key)| {
                    let total: BigInt = partitions.iter().map(|p| p[i].1.clone()).sum();
                    (key, total)
                })
                .collect();
            return rebuild_from_partition(ambient, merged);
        }
    }
    Polytope::Sum { ambient, members }
}
