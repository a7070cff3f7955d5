//! Parameter sweeps: inclusive ranges, list and matrix flags, lexicographic
//! grid expansion, and the (optionally parallel) per-cell evaluation driver.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::CliError;

/// Default ceiling on dimension-like parameters of families whose cost is
/// exponential in them (coordinate-subset and face enumerations). Lifted by
/// `--allow-large`.
pub const DIMENSION_CAP: u64 = 16;

/// Default ceiling on the number of grid cells a sweep may expand to.
/// Lifted by `--allow-large`.
pub const CELL_CAP: usize = 100_000;

/// Checks an exponential-cost dimension parameter against [`DIMENSION_CAP`].
pub fn cap(name: &str, value: u64, allow_large: bool) -> Result<(), CliError> {
    if !allow_large && value > DIMENSION_CAP {
        return Err(CliError::hypothesis(format!(
            "{name} = {value} exceeds the default enumeration cap {DIMENSION_CAP} \
             (cost grows exponentially in it); pass --allow-large to proceed"
        )));
    }
    Ok(())
}

/// A single value `"7"` or an inclusive range `"2..8"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl RangeArg {
    pub fn single(v: u64) -> Self {
        RangeArg { lo: v, hi: v }
    }

    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }

    #[allow(clippy::len_without_is_empty)] // never empty by construction
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// The single value, if the range holds exactly one.
    pub fn as_single(&self) -> Option<u64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start {lo:?} in {s:?}"))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end {hi:?} in {s:?}"))?;
            if hi < lo {
                return Err(format!("empty range {s:?}: end is below start"));
            }
            Ok(RangeArg { lo, hi })
        } else {
            let v: u64 = s
                .trim()
                .parse()
                .map_err(|_| format!("expected N or LO..HI, got {s:?}"))?;
            Ok(RangeArg::single(v))
        }
    }
}

/// Parses a comma-separated list of nonnegative integers.
pub fn parse_u64_list(flag: &str, text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| {
                CliError::shape(format!(
                    "--{flag}: expected comma-separated nonnegative integers, got {text:?}"
                ))
            })
        })
        .collect()
}

/// Parses a `;`-separated list of comma-separated rows and rejects ragged
/// shapes.
pub fn parse_matrix(flag: &str, text: &str) -> Result<Vec<Vec<u64>>, CliError> {
    let rows: Vec<Vec<u64>> = text
        .split(';')
        .map(|row| parse_u64_list(flag, row))
        .collect::<Result<_, _>>()?;
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::shape(format!(
            "--{flag}: ragged matrix {text:?} (all rows must have the same length)"
        )));
    }
    Ok(rows)
}

/// One fully resolved parameter point of a sweep. Scalar flags that were
/// given (directly or via a config default) are present in `scalars`; list
/// flags are shared across all cells of a grid.
#[derive(Debug, Clone, Default)]
pub struct ParamPoint {
    pub scalars: BTreeMap<&'static str, u64>,
    pub degrees: Option<Vec<u64>>,
    pub blocks: Option<Vec<u64>>,
    pub matrix: Option<Vec<Vec<u64>>>,
    pub reading_smaller: bool,
    pub regular_sequence: bool,
    pub allow_large: bool,
}

impl ParamPoint {
    pub fn get(&self, name: &str) -> Option<u64> {
        self.scalars.get(name).copied()
    }

    /// Required scalar parameter; missing flags surface as
    /// [`CliError::MissingParam`] so `compare` can distinguish an unbindable
    /// id from a genuine hypothesis violation.
    pub fn need(&self, id: &str, name: &'static str) -> Result<u64, CliError> {
        self.get(name).ok_or_else(|| CliError::MissingParam {
            id: id.to_string(),
            name,
        })
    }

    pub fn need_usize(&self, id: &str, name: &'static str) -> Result<usize, CliError> {
        Ok(self.need(id, name)? as usize)
    }

    pub fn get_usize(&self, name: &str) -> Option<usize> {
        self.get(name).map(|v| v as usize)
    }

    pub fn need_degrees(&self, id: &str) -> Result<&[u64], CliError> {
        self.degrees
            .as_deref()
            .ok_or_else(|| CliError::MissingParam {
                id: id.to_string(),
                name: "degrees",
            })
    }

    pub fn need_blocks(&self, id: &str) -> Result<&[u64], CliError> {
        self.blocks
            .as_deref()
            .ok_or_else(|| CliError::MissingParam {
                id: id.to_string(),
                name: "blocks",
            })
    }

    pub fn need_matrix(&self, id: &str) -> Result<&[Vec<u64>], CliError> {
        self.matrix
            .as_deref()
            .ok_or_else(|| CliError::MissingParam {
                id: id.to_string(),
                name: "matrix",
            })
    }
}

/// A sweep before expansion: the present scalar axes in canonical order plus
/// the shared list-valued flags.
#[derive(Debug, Clone, Default)]
pub struct GridSpec {
    pub axes: Vec<(&'static str, RangeArg)>,
    pub degrees: Option<Vec<u64>>,
    pub blocks: Option<Vec<u64>>,
    pub matrix: Option<Vec<Vec<u64>>>,
    pub reading_smaller: bool,
    pub regular_sequence: bool,
}

/// Expands a spec to its full grid, last axis fastest (lexicographic in the
/// canonical axis order). A spec with no axes expands to one point.
pub fn expand(spec: &GridSpec, allow_large: bool) -> Result<Vec<ParamPoint>, CliError> {
    let mut cells: usize = 1;
    for (_, r) in &spec.axes {
        cells = cells
            .checked_mul(r.len())
            .filter(|&c| allow_large || c <= CELL_CAP)
            .ok_or_else(|| {
                CliError::hypothesis(format!(
                    "grid exceeds the default cap of {CELL_CAP} cells; \
                     pass --allow-large to proceed"
                ))
            })?;
    }

    let mut points = Vec::with_capacity(cells);
    let mut idx = vec![0usize; spec.axes.len()];
    loop {
        let mut scalars = BTreeMap::new();
        for (a, (name, r)) in spec.axes.iter().enumerate() {
            scalars.insert(*name, r.lo + idx[a] as u64);
        }
        points.push(ParamPoint {
            scalars,
            degrees: spec.degrees.clone(),
            blocks: spec.blocks.clone(),
            matrix: spec.matrix.clone(),
            reading_smaller: spec.reading_smaller,
            regular_sequence: spec.regular_sequence,
            allow_large,
        });

        let mut a = spec.axes.len();
        loop {
            if a == 0 {
                return Ok(points);
            }
            a -= 1;
            idx[a] += 1;
            if idx[a] < spec.axes[a].1.len() {
                break;
            }
            idx[a] = 0;
        }
    }
}

/// Evaluates one closure per cell. With the `parallel` feature the cells run
/// on the rayon pool; the result order — and therefore every output byte —
/// is identical to the sequential fallback.
pub fn map_cells<C, R, F>(cells: &[C], f: F) -> Vec<R>
where
    C: Sync,
    R: Send,
    F: Fn(&C) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cells.par_iter().map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cells.iter().map(&f).collect()
    }
}
