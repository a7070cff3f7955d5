//! The `compare` subcommand: several bound ids evaluated on one shared
//! grid, one column per id plus a winner column (strictly smallest value,
//! `tie` otherwise).

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::cli::{CompareArgs, DegreeView};
use crate::commands::bound::{evaluate_id, known_ids};
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::{table_to_bytes, write_output};
use crate::render::render_scalar;
use crate::sweep::{expand, map_cells, ParamPoint};

/// Rewrites the cell for one id under the chosen degree view.
///
/// `diagonal` models a single polynomial of multi-degree `(d,...,d)` in `k`
/// variables: ids reading a degree vector receive the vector itself, ids
/// reading one total degree receive `k*d` (with one polynomial). Comparing
/// those columns contrasts what the two degree notions know about the same
/// object.
fn apply_view(id: &str, cell: &ParamPoint, view: DegreeView) -> Result<ParamPoint, CliError> {
    match view {
        DegreeView::Scalar => Ok(cell.clone()),
        DegreeView::Diagonal => {
            let d = cell.need("degree-view diagonal", "d")?;
            let k = cell.need("degree-view diagonal", "k")?;
            let mut viewed = cell.clone();
            match id {
                "one-multi" => {
                    viewed.degrees = Some(vec![d; k as usize]);
                }
                "optm" | "closed-semialgebraic" | "general-semialgebraic" => {
                    viewed.scalars.insert("d", d * k);
                }
                "total-degree" => {
                    viewed.scalars.insert("d", d * k);
                    viewed.scalars.insert("l", 1);
                }
                other => {
                    return Err(CliError::unsupported(format!(
                        "--degree-view diagonal defines no reading for id {other:?}; \
                         it covers one-multi, optm, total-degree, closed-semialgebraic, \
                         general-semialgebraic"
                    )));
                }
            }
            Ok(viewed)
        }
    }
}

/// An id that cannot be bound to the shared grid makes the whole comparison
/// ill-posed, which is a shape mismatch rather than a hypothesis violation.
fn upgrade_missing(e: CliError) -> CliError {
    match e {
        CliError::MissingParam { id, name } => CliError::shape(format!(
            "id {id:?} cannot be bound to this comparison grid: missing --{name}"
        )),
        other => other,
    }
}

fn winner_of(ids: &[String], values: &[BigRational]) -> String {
    let min = values.iter().min().expect("at least two ids");
    let mut winners = ids.iter().zip(values).filter(|(_, v)| *v == min);
    let first = winners.next().expect("minimum exists").0;
    if winners.next().is_some() {
        "tie".to_string()
    } else {
        first.clone()
    }
}

/// Column labels: repeated ids get a positional suffix so headers stay
/// unambiguous in both formats.
fn id_columns(ids: &[String]) -> Vec<String> {
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    ids.iter()
        .map(|id| {
            let n = seen.entry(id.as_str()).or_insert(0);
            *n += 1;
            if *n == 1 {
                id.clone()
            } else {
                format!("{id}#{n}")
            }
        })
        .collect()
}

pub fn run(args: &CompareArgs, ctx: &Ctx) -> Result<(), CliError> {
    let ids: Vec<String> = args
        .ids
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if ids.len() < 2 {
        return Err(CliError::shape(
            "give at least two comma-separated ids to compare",
        ));
    }
    let known = known_ids();
    for id in &ids {
        if !known.contains(&id.as_str()) {
            return Err(CliError::UnknownId {
                id: id.clone(),
                known: known.join(", "),
            });
        }
    }

    let spec = args.params.to_spec(ctx.cfg)?;
    let axis_names: Vec<&'static str> = spec.axes.iter().map(|(n, _)| *n).collect();
    let cells = expand(&spec, ctx.allow_large)?;

    let evaluated: Vec<Result<Vec<BigRational>, CliError>> = map_cells(&cells, |cell| {
        ids.iter()
            .map(|id| {
                let viewed = apply_view(id, cell, args.degree_view)?;
                Ok(evaluate_id(id, &viewed)?.0.value)
            })
            .collect()
    });

    let mut rows: Vec<Vec<String>> = Vec::with_capacity(cells.len());
    for (cell, outcome) in cells.iter().zip(evaluated) {
        let values = outcome.map_err(upgrade_missing)?;
        let mut row: Vec<String> = axis_names
            .iter()
            .map(|n| cell.get(n).expect("axis value present").to_string())
            .collect();
        row.extend(values.iter().map(render_scalar));
        row.push(winner_of(&ids, &values));
        rows.push(row);
    }

    let mut header: Vec<String> = axis_names.iter().map(|n| n.to_string()).collect();
    header.extend(id_columns(&ids));
    header.push("winner".to_string());

    let bytes = table_to_bytes(&header, &rows, ctx.format)?;
    write_output(&bytes, ctx.out)
}
