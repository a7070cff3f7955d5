//! The `chi` subcommand: affine Euler characteristic of a generic system,
//! with an explicit choice of evaluation kernel.

use num_bigint::BigInt;

use generic_chi::GenericSystem;

use crate::cli::{ChiArgs, EngineArg};
use crate::commands::generic::family_cells;
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::emit_rows;
use crate::render::{render_int, ReportRow};
use crate::sweep::map_cells;

fn engine_name(engine: EngineArg) -> &'static str {
    match engine {
        EngineArg::Auto => "auto",
        EngineArg::Seq => "seq",
        EngineArg::Par => "par",
        EngineArg::Enumerated => "enumerated",
    }
}

fn chi_with(engine: EngineArg, sys: &GenericSystem) -> Result<BigInt, CliError> {
    match engine {
        EngineArg::Auto => Ok(generic_chi::chi_khovanskii(sys)?),
        EngineArg::Seq => Ok(generic_chi::chi_khovanskii_seq(sys)?),
        EngineArg::Par => {
            #[cfg(feature = "parallel")]
            {
                Ok(generic_chi::chi_khovanskii_par(sys)?)
            }
            #[cfg(not(feature = "parallel"))]
            {
                Err(CliError::unsupported(
                    "this binary was built without the parallel feature; \
                     use --engine seq or rebuild with default features",
                ))
            }
        }
        EngineArg::Enumerated => Ok(generic_chi::chi_khovanskii_enumerated(sys)?),
    }
}

pub fn run(args: &ChiArgs, ctx: &Ctx) -> Result<(), CliError> {
    let cells = family_cells(&args.family, ctx.cfg, ctx.allow_large)?;
    let rows: Vec<Result<ReportRow, CliError>> = map_cells(&cells, |cell| {
        let chi = chi_with(args.engine, &cell.system()?)?;
        Ok(ReportRow {
            id: cell.id().to_string(),
            parameters: format!("{} engine={}", cell.params(), engine_name(args.engine)),
            value: render_int(&chi),
            notes: "affine Euler characteristic of the generic zero set".to_string(),
            citation: "chi".to_string(),
        })
    });
    let rows: Vec<ReportRow> = rows.into_iter().collect::<Result<_, _>>()?;
    emit_rows(&rows, ctx.format, ctx.out)
}
