//! Command-line surface. Every scalar parameter flag accepts `N` or an
//! inclusive `LO..HI` range; giving ranges sweeps the lexicographic grid
//! over the flags in their documented canonical order (`--d` outermost).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Config;
use crate::error::CliError;
use crate::sweep::{parse_matrix, parse_u64_list, GridSpec, RangeArg};

#[derive(Debug, Parser)]
#[command(
    name = "betti",
    version,
    about = "Exact evaluation, cross-validation, and comparison of Betti-number bounds",
    long_about = "Exact evaluation, cross-validation, and comparison of Betti-number bounds \
                  for real and complex algebraic and semi-algebraic sets. All arithmetic is \
                  exact big-rational; no floating point is used anywhere, and equal inputs \
                  always produce byte-identical reports."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// JSON file with default parameter grids, e.g. {"defaults":{"k":"2..6"}}.
    /// Command-line flags take precedence over config defaults.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Lift the default cap (16) on dimension parameters of families whose
    /// cost is exponential in them, and the 100000-cell grid cap.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// RFC 4180 CSV with a header row.
    Csv,
    /// One object {"schema":1,"rows":[...]} with every value as a string.
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one bound id at a parameter point or over a grid.
    Bound(BoundArgs),
    /// Betti numbers of generic complete intersections, exact via χ.
    Generic(GenericArgs),
    /// Euler characteristic of a generic system from its support family.
    Chi(ChiArgs),
    /// Mixed volumes of axis boxes and scaled standard simplices.
    Mixedvol(MixedvolArgs),
    /// Evaluate several bound ids on one grid; the smallest value wins.
    Compare(CompareArgs),
    /// Run the cross-validation suites; any failure exits nonzero.
    Verify(VerifyArgs),
    /// Growth-regime tables for the closed-form coefficients.
    Asymptotic(AsymptoticArgs),
}

/// The shared sweepable parameter namespace of `bound` and `compare`.
/// Flags not read by the chosen id are ignored, so several ids can share
/// one grid. Canonical sweep order: d, k, l, s, i, d1, d2, k1, k2,
/// k-prime, m, dim, d-set, s1, s2.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamGrid {
    /// Degree bound (N or LO..HI, inclusive).
    #[arg(long)]
    pub d: Option<RangeArg>,
    /// Ambient dimension / number of variables.
    #[arg(long)]
    pub k: Option<RangeArg>,
    /// Number of polynomials cutting the set.
    #[arg(long)]
    pub l: Option<RangeArg>,
    /// Number of sign-condition polynomials.
    #[arg(long)]
    pub s: Option<RangeArg>,
    /// Betti index (omit for totals where the family has one).
    #[arg(long)]
    pub i: Option<RangeArg>,
    /// Smaller degree of a two-degree family.
    #[arg(long)]
    pub d1: Option<RangeArg>,
    /// Larger degree of a two-degree family.
    #[arg(long)]
    pub d2: Option<RangeArg>,
    /// Variables in the general-degree block.
    #[arg(long)]
    pub k1: Option<RangeArg>,
    /// Variables in the quadratic block.
    #[arg(long)]
    pub k2: Option<RangeArg>,
    /// Rank parameter of the transversal family.
    #[arg(long = "k-prime")]
    pub k_prime: Option<RangeArg>,
    /// Quadratic polynomials in the second family, or the target dimension
    /// of a polynomial map.
    #[arg(long)]
    pub m: Option<RangeArg>,
    /// Dimension of the smooth set (smooth-components).
    #[arg(long)]
    pub dim: Option<RangeArg>,
    /// Degree of the equations of the target set (map families).
    #[arg(long = "d-set")]
    pub d_set: Option<RangeArg>,
    /// Sign conditions on the source factor (fourier-mukai).
    #[arg(long)]
    pub s1: Option<RangeArg>,
    /// Sign conditions on the target factor (fourier-mukai).
    #[arg(long)]
    pub s2: Option<RangeArg>,
    /// Comma-separated degree vector (vector-degree families).
    #[arg(long)]
    pub degrees: Option<String>,
    /// Comma-separated block sizes (multi-degree-blocks).
    #[arg(long)]
    pub blocks: Option<String>,
    /// Degree matrix, rows separated by ';' (multi-degree-boxes): "2,3;4,5".
    #[arg(long)]
    pub matrix: Option<String>,
    /// Which of the two degrees the component count reads.
    #[arg(long, value_enum)]
    pub reading: Option<Reading>,
    /// Assert the degrees form a regular sequence (sharper binomial).
    #[arg(long)]
    pub regular_sequence: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Larger,
    Smaller,
}

impl ParamGrid {
    /// Resolves flags against config defaults and fixes the canonical axis
    /// order.
    pub fn to_spec(&self, cfg: &Config) -> Result<GridSpec, CliError> {
        let mut axes = Vec::new();
        let flags: [(&'static str, &Option<RangeArg>); 15] = [
            ("d", &self.d),
            ("k", &self.k),
            ("l", &self.l),
            ("s", &self.s),
            ("i", &self.i),
            ("d1", &self.d1),
            ("d2", &self.d2),
            ("k1", &self.k1),
            ("k2", &self.k2),
            ("k-prime", &self.k_prime),
            ("m", &self.m),
            ("dim", &self.dim),
            ("d-set", &self.d_set),
            ("s1", &self.s1),
            ("s2", &self.s2),
        ];
        for (name, value) in flags {
            if let Some(r) = cfg.range(name, *value)? {
                axes.push((name, r));
            }
        }
        Ok(GridSpec {
            axes,
            degrees: self
                .degrees
                .as_deref()
                .map(|t| parse_u64_list("degrees", t))
                .transpose()?,
            blocks: self
                .blocks
                .as_deref()
                .map(|t| parse_u64_list("blocks", t))
                .transpose()?,
            matrix: self
                .matrix
                .as_deref()
                .map(|t| parse_matrix("matrix", t))
                .transpose()?,
            reading_smaller: matches!(self.reading, Some(Reading::Smaller)),
            regular_sequence: self.regular_sequence,
        })
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Bound id; an unknown id exits with code 2 and the known-id list.
    #[arg(long)]
    pub id: String,
    #[command(flatten)]
    pub params: ParamGrid,
}

/// Support-family selectors shared by `generic` and `chi`. Exactly one of
/// --quadrics, --simplex-d, --multi, --total, --boxes must be given.
#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// ℓ generic quadrics in k variables (value is ℓ; needs --k).
    #[arg(long)]
    pub quadrics: Option<RangeArg>,
    /// Common total degree of --l generic polynomials in --k variables.
    #[arg(long = "simplex-d")]
    pub simplex_d: Option<RangeArg>,
    /// One generic polynomial with this multi-degree (comma-separated;
    /// k = number of entries).
    #[arg(long)]
    pub multi: Option<String>,
    /// Distinct total degrees, one per polynomial (comma-separated; needs --k).
    #[arg(long)]
    pub total: Option<String>,
    /// Box supports: degree matrix "d11,d12;d21,d22" (k = columns).
    #[arg(long)]
    pub boxes: Option<String>,
    /// Ambient dimension.
    #[arg(long)]
    pub k: Option<RangeArg>,
    /// Number of polynomials for --simplex-d (default 1).
    #[arg(long)]
    pub l: Option<RangeArg>,
}

#[derive(Debug, Args)]
pub struct GenericArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Ambient setting.
    #[arg(long, value_enum, default_value_t = SettingArg::Affine)]
    pub setting: SettingArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SettingArg {
    Affine,
    Projective,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Evaluation kernel for the coordinate-subset sum.
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    /// Parallel kernel when built with the `parallel` feature, else sequential.
    Auto,
    Seq,
    /// Requires a build with the `parallel` feature.
    Par,
    /// Brute-force face enumeration (slow; for cross-checks).
    Enumerated,
}

#[derive(Debug, Args)]
pub struct MixedvolArgs {
    /// Axis boxes: matrix "s11,s12;s21,s22", one body per row (k = columns).
    #[arg(long)]
    pub boxes: Option<String>,
    /// Scaled standard simplices: comma-separated degrees, one body each.
    #[arg(long)]
    pub simplices: Option<String>,
    /// Ambient dimension (required when only --simplices is given; must
    /// match the box columns otherwise).
    #[arg(long)]
    pub k: Option<u64>,
    /// Comma-separated multiplicities, one per body, summing to k
    /// (default: all 1).
    #[arg(long)]
    pub multiplicities: Option<String>,
    /// Evaluate with the interpolation oracle instead of the closed forms.
    #[arg(long)]
    pub oracle: bool,
    /// Evaluate closed forms AND oracle and require exact agreement.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Comma-separated bound ids (at least two; repeats allowed).
    #[arg(long)]
    pub ids: String,
    #[command(flatten)]
    pub params: ParamGrid,
    /// How ids read the --d axis.
    #[arg(long = "degree-view", value_enum, default_value_t = DegreeView::Scalar)]
    pub degree_view: DegreeView,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DegreeView {
    /// Every id reads --d literally.
    Scalar,
    /// The cell models ONE polynomial of multi-degree (d,...,d) in k
    /// variables: vector-degree ids receive the vector, total-degree ids
    /// its total degree k*d (with one polynomial).
    Diagonal,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run (repeatable); omit to run all suites.
    #[arg(long)]
    pub suite: Vec<String>,
}

#[derive(Debug, Args)]
pub struct AsymptoticArgs {
    /// Inclusive ℓ range for the leading-coefficient table (default 2..12).
    #[arg(long)]
    pub l: Option<RangeArg>,
    /// Switch to the projective-quadrics deviation table at this fixed ℓ.
    #[arg(long = "quadrics-l")]
    pub quadrics_l: Option<u64>,
    /// Inclusive k range for the deviation table (default l+1..40).
    #[arg(long)]
    pub k: Option<RangeArg>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn spec_axes_keep_canonical_order() {
        let grid = ParamGrid {
            k: Some(RangeArg::single(3)),
            d: Some(RangeArg::single(2)),
            s: Some(RangeArg::single(1)),
            ..ParamGrid::default()
        };
        let spec = grid.to_spec(&Config::default()).unwrap();
        let names: Vec<&str> = spec.axes.iter().map(|(n, _)| *n).collect();
        assert_eq!(names, vec!["d", "k", "s"]);
    }
}
