//! Command-line front end over the exact bound catalog, the map-image
//! bounds, the generic complete-intersection engine, and the mixed-volume
//! kernels.
//!
//! Everything is exact big-rational arithmetic; the same invocation always
//! produces byte-identical output, whether the build evaluates grid cells
//! in parallel (feature `parallel`, on by default) or sequentially.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod render;
pub mod sweep;

pub use cli::Cli;
pub use error::CliError;

use commands::Ctx;

/// Executes one parsed invocation end to end.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = config::load(cli.config.as_deref())?;
    let ctx = Ctx {
        format: cli.format,
        out: cli.out.as_deref(),
        allow_large: cli.allow_large,
        cfg: &cfg,
    };
    match &cli.command {
        cli::Command::Bound(args) => commands::bound::run(args, &ctx),
        cli::Command::Generic(args) => commands::generic::run(args, &ctx),
        cli::Command::Chi(args) => commands::chi::run(args, &ctx),
        cli::Command::Mixedvol(args) => commands::mixedvol::run(args, &ctx),
        cli::Command::Compare(args) => commands::compare::run(args, &ctx),
        cli::Command::Verify(args) => commands::verify::run(args, &ctx),
        cli::Command::Asymptotic(args) => commands::asymptotic::run(args, &ctx),
    }
}
