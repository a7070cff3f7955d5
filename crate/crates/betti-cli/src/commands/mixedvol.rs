//! The `mixedvol` subcommand: exact mixed volumes of axis boxes and scaled
//! standard simplices, through the closed forms or the interpolation oracle.

use polytope_mv::{mixed_volume, mixed_volume_oracle_interpolation, MixedVolumeQuery, Polytope};

use crate::cli::MixedvolArgs;
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::emit_rows;
use crate::render::{join_matrix, join_u64s, pairs, render_scalar, ReportRow};
use crate::sweep::{cap, parse_matrix, parse_u64_list};

pub fn run(args: &MixedvolArgs, ctx: &Ctx) -> Result<(), CliError> {
    let mut bodies: Vec<Polytope> = Vec::new();
    let mut params: Vec<(&str, String)> = Vec::new();
    let mut ambient: Option<usize> = args.k.map(|k| k as usize);

    if let Some(text) = &args.boxes {
        let rows = parse_matrix("boxes", text)?;
        let cols = rows[0].len();
        match ambient {
            Some(k) if k != cols => {
                return Err(CliError::shape(format!(
                    "--k = {k} does not match the {cols} box columns"
                )));
            }
            _ => ambient = Some(cols),
        }
        for row in &rows {
            bodies.push(Polytope::axis_box_u64(row));
        }
        params.push(("boxes", join_matrix(&rows)));
    }
    if let Some(text) = &args.simplices {
        let degrees = parse_u64_list("simplices", text)?;
        let k = ambient.ok_or_else(|| {
            CliError::shape("--simplices alone needs --k for the ambient dimension")
        })?;
        for &d in &degrees {
            bodies.push(Polytope::full_simplex(k, d));
        }
        params.push(("simplices", join_u64s(&degrees)));
    }
    if bodies.is_empty() {
        return Err(CliError::unsupported(
            "give at least one body via --boxes or --simplices",
        ));
    }
    let k = ambient.expect("bodies imply an ambient dimension");
    cap("ambient dimension", k as u64, ctx.allow_large)?;
    params.push(("k", k.to_string()));

    let query = match &args.multiplicities {
        Some(text) => {
            let mult: Vec<usize> = parse_u64_list("multiplicities", text)?
                .into_iter()
                .map(|v| v as usize)
                .collect();
            params.push((
                "multiplicities",
                mult.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            ));
            MixedVolumeQuery::new(bodies, mult)?
        }
        None => MixedVolumeQuery::of_bodies(bodies)?,
    };

    let (value, notes) = if args.check {
        let closed = mixed_volume(&query)?;
        let oracle = mixed_volume_oracle_interpolation(&query)?;
        if closed != oracle {
            return Err(CliError::Failed(format!(
                "closed form and interpolation oracle disagree: {closed} vs {oracle}"
            )));
        }
        (closed, "closed form and interpolation oracle agree")
    } else if args.oracle {
        (
            mixed_volume_oracle_interpolation(&query)?,
            "interpolation oracle",
        )
    } else {
        (mixed_volume(&query)?, "closed form")
    };

    let rows = vec![ReportRow {
        id: "mixedvol".to_string(),
        parameters: pairs(&params),
        value: render_scalar(&value),
        notes: notes.to_string(),
        citation: "mixed-volume".to_string(),
    }];
    emit_rows(&rows, ctx.format, ctx.out)
}
