//! The `bound` subcommand: dispatch from a catalog id and a parameter point
//! to the matching evaluator. Also hosts [`evaluate_id`], which `compare`
//! reuses cell by cell.

use bound_catalog::{
    block_semi_bounds, block_variety_bound, box_semi_bounds, box_variety_bound, classic_bound,
    mixed_quadratic_semi_bounds, mixed_quadratic_variety_bound, multi_quadratic_semi_bounds,
    multi_quadratic_variety_bound, projective_quadrics_bound, sign_components_two_degree_bound,
    two_degree_semi_bounds, two_degree_variety_bound, BoundResult, ClassicBound, DegreeReading,
};
use combinat_core::IntVector;
use map_bounds::{scenario_bound, scenario_catalog, MapScenario};
use num_rational::BigRational;

use crate::cli::BoundArgs;
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::emit_rows;
use crate::render::{join_matrix, join_u64s, pairs, row_from_bound, ReportRow};
use crate::sweep::{cap, expand, map_cells, ParamPoint};

/// Every id `bound` and `compare` accept, in catalog order.
pub fn known_ids() -> Vec<&'static str> {
    bound_catalog::catalog()
        .iter()
        .map(|e| e.id)
        .chain(scenario_catalog().iter().map(|e| e.id))
        .collect()
}

fn unknown(id: &str) -> CliError {
    CliError::UnknownId {
        id: id.to_string(),
        known: known_ids().join(", "),
    }
}

/// Either `--l` (variety reading) or `--s` with optional `--i` (sign
/// conditions); used by the families that expose both readings.
enum Reading {
    Variety(usize),
    SignConditions(u64, Option<usize>),
}

fn variety_or_signs(id: &str, p: &ParamPoint) -> Result<Reading, CliError> {
    match (p.get_usize("l"), p.get("s")) {
        (Some(_), Some(_)) => Err(CliError::hypothesis(format!(
            "bound {id:?} takes either --l (variety) or --s (sign conditions), not both"
        ))),
        (Some(l), None) => Ok(Reading::Variety(l)),
        (None, Some(s)) => Ok(Reading::SignConditions(s, p.get_usize("i"))),
        (None, None) => Err(CliError::MissingParam {
            id: id.to_string(),
            name: "l (or --s)",
        }),
    }
}

fn reading_notes(reading: &Reading) -> Vec<(&'static str, String)> {
    match reading {
        Reading::Variety(l) => vec![("l", l.to_string())],
        Reading::SignConditions(s, i) => {
            let mut out = vec![("s", s.to_string())];
            if let Some(i) = i {
                out.push(("i", i.to_string()));
            }
            out
        }
    }
}

/// Evaluates one id at one parameter point. Returns the result together
/// with the consumed parameters rendered in canonical order. Flags the id
/// does not read are ignored.
pub fn evaluate_id(id: &str, p: &ParamPoint) -> Result<(BoundResult, String), CliError> {
    match id {
        "optm" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let r = classic_bound(&ClassicBound::VarietyTotalDegree { d, k })?;
            Ok((r, pairs(&[("d", d.to_string()), ("k", k.to_string())])))
        }
        "closed-semialgebraic" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let r = classic_bound(&ClassicBound::ClosedSignConditions { s, d, k })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                ]),
            ))
        }
        "general-semialgebraic" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let r = classic_bound(&ClassicBound::GeneralSemialgebraic { s, d, k })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                ]),
            ))
        }
        "quadratic-inequalities" => {
            let k = p.need_usize(id, "k")?;
            let s = p.need_usize(id, "s")?;
            let i = p.need_usize(id, "i")?;
            let r = classic_bound(&ClassicBound::QuadraticInequalities { s, k, i })?;
            Ok((
                r,
                pairs(&[
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("i", i.to_string()),
                ]),
            ))
        }
        "smooth-components" => {
            let k = p.need_usize(id, "k")?;
            let dim = p.need_usize(id, "dim")?;
            let degrees = p.need_degrees(id)?.to_vec();
            let rendered = join_u64s(&degrees);
            let r = classic_bound(&ClassicBound::SmoothComponents {
                degrees,
                k,
                dim,
                regular_sequence: p.regular_sequence,
            })?;
            Ok((
                r,
                pairs(&[
                    ("k", k.to_string()),
                    ("dim", dim.to_string()),
                    ("degrees", rendered),
                    ("regular-sequence", p.regular_sequence.to_string()),
                ]),
            ))
        }
        "total-degree" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let l = p.need_usize(id, "l")?;
            let r = bound_catalog::total_degree_variety_bound(d, k, l)?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("l", l.to_string()),
                ]),
            ))
        }
        "multi-degree-blocks" => {
            let degrees = IntVector::from_u64s(p.need_degrees(id)?);
            let blocks = IntVector::from_u64s(p.need_blocks(id)?);
            let reading = variety_or_signs(id, p)?;
            let r = match reading {
                Reading::Variety(l) => block_variety_bound(&degrees, &blocks, l)?,
                Reading::SignConditions(s, i) => block_semi_bounds(&degrees, &blocks, s, i)?,
            };
            let mut parts = reading_notes(&reading);
            parts.push(("degrees", join_u64s(p.need_degrees(id)?)));
            parts.push(("blocks", join_u64s(p.need_blocks(id)?)));
            Ok((r, pairs(&parts)))
        }
        "multi-degree-boxes" => {
            let rows = p.need_matrix(id)?;
            cap("matrix rows", rows.len() as u64, p.allow_large)?;
            let matrix = combinat_core::IntMatrix::from_rows(rows);
            let mut parts = Vec::new();
            let r = match p.get("s") {
                None => box_variety_bound(&matrix)?,
                Some(s) => {
                    parts.push(("s", s.to_string()));
                    if let Some(i) = p.get_usize("i") {
                        parts.push(("i", i.to_string()));
                    }
                    box_semi_bounds(&matrix, s, p.get_usize("i"))?
                }
            };
            parts.push(("matrix", join_matrix(rows)));
            Ok((r, pairs(&parts)))
        }
        "partially-quadratic" => {
            let d = p.need(id, "d")?;
            let k1 = p.need_usize(id, "k1")?;
            let k2 = p.need_usize(id, "k2")?;
            let reading = variety_or_signs(id, p)?;
            let r = match reading {
                Reading::Variety(l) => mixed_quadratic_variety_bound(d, k1, k2, l)?,
                Reading::SignConditions(s, i) => mixed_quadratic_semi_bounds(d, k1, k2, s, i)?,
            };
            let mut parts = vec![("d", d.to_string())];
            parts.extend(reading_notes(&reading));
            parts.push(("k1", k1.to_string()));
            parts.push(("k2", k2.to_string()));
            Ok((r, pairs(&parts)))
        }
        "projective-quadrics" => {
            let k = p.need_usize(id, "k")?;
            let l = p.need_usize(id, "l")?;
            let r = projective_quadrics_bound(k, l)?;
            Ok((r, pairs(&[("k", k.to_string()), ("l", l.to_string())])))
        }
        "two-family-quadratic" => {
            let d = p.need(id, "d")?;
            let s = p.need(id, "s")?;
            let k1 = p.need_usize(id, "k1")?;
            let k2 = p.need_usize(id, "k2")?;
            let m = p.need(id, "m")?;
            let i = p.get_usize("i");
            let r = bound_catalog::two_family_quadratic_bounds(d, k1, k2, s, m, i)?;
            let mut parts = vec![("d", d.to_string()), ("s", s.to_string())];
            if let Some(i) = i {
                parts.push(("i", i.to_string()));
            }
            parts.extend([
                ("k1", k1.to_string()),
                ("k2", k2.to_string()),
                ("m", m.to_string()),
            ]);
            Ok((r, pairs(&parts)))
        }
        "multi-partially-quadratic" => {
            let degrees = IntVector::from_u64s(p.need_degrees(id)?);
            let k2 = p.need_usize(id, "k2")?;
            let reading = variety_or_signs(id, p)?;
            let r = match reading {
                Reading::Variety(l) => multi_quadratic_variety_bound(&degrees, k2, l)?,
                Reading::SignConditions(s, i) => multi_quadratic_semi_bounds(&degrees, k2, s, i)?,
            };
            let mut parts = reading_notes(&reading);
            parts.push(("k2", k2.to_string()));
            parts.push(("degrees", join_u64s(p.need_degrees(id)?)));
            Ok((r, pairs(&parts)))
        }
        "refined-two-degree" => {
            let k = p.need_usize(id, "k")?;
            let d1 = p.need(id, "d1")?;
            let d2 = p.need(id, "d2")?;
            let r = two_degree_variety_bound(d1, d2, k)?;
            Ok((
                r,
                pairs(&[
                    ("k", k.to_string()),
                    ("d1", d1.to_string()),
                    ("d2", d2.to_string()),
                ]),
            ))
        }
        "component-two-degree" => {
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let d1 = p.need(id, "d1")?;
            let d2 = p.need(id, "d2")?;
            let k_prime = p.need_usize(id, "k-prime")?;
            let reading = if p.reading_smaller {
                DegreeReading::SmallerDegree
            } else {
                DegreeReading::LargerDegree
            };
            let r = sign_components_two_degree_bound(d1, d2, k, k_prime, s, reading)?;
            Ok((
                r,
                pairs(&[
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("d1", d1.to_string()),
                    ("d2", d2.to_string()),
                    ("k-prime", k_prime.to_string()),
                    (
                        "reading",
                        if p.reading_smaller { "smaller" } else { "larger" }.to_string(),
                    ),
                ]),
            ))
        }
        "two-degree-sign-conditions" => {
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let i = p.need_usize(id, "i")?;
            let d1 = p.need(id, "d1")?;
            let d2 = p.need(id, "d2")?;
            let k_prime = p.need_usize(id, "k-prime")?;
            let r = two_degree_semi_bounds(d1, d2, k, k_prime, s, i)?;
            Ok((
                r,
                pairs(&[
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("i", i.to_string()),
                    ("d1", d1.to_string()),
                    ("d2", d2.to_string()),
                    ("k-prime", k_prime.to_string()),
                ]),
            ))
        }
        "one-multi" => {
            let degrees = p.need_degrees(id)?;
            cap("number of degrees", degrees.len() as u64, p.allow_large)?;
            if degrees.contains(&0) {
                return Err(CliError::hypothesis(
                    "one-multi requires every degree >= 1".to_string(),
                ));
            }
            let value = generic_chi::betti_one_multi(&IntVector::from_u64s(degrees))?;
            let r = BoundResult::checked(
                BigRational::from(value),
                "one-multi",
                vec!["generic polynomial of the given multi-degree".to_string()],
                None,
                true,
            );
            Ok((r, pairs(&[("degrees", join_u64s(degrees))])))
        }
        "pull-back" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let m = p.need_usize(id, "m")?;
            let d_set = p.need(id, "d-set")?;
            let r = scenario_bound(&MapScenario::PullBack { k, m, d, d_set, s })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("m", m.to_string()),
                    ("d-set", d_set.to_string()),
                ]),
            ))
        }
        "image" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let i = p.need_usize(id, "i")?;
            let m = p.need_usize(id, "m")?;
            let d_set = p.need(id, "d-set")?;
            let r = scenario_bound(&MapScenario::Image {
                k,
                m,
                d,
                d_set,
                s,
                i,
            })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("i", i.to_string()),
                    ("m", m.to_string()),
                    ("d-set", d_set.to_string()),
                ]),
            ))
        }
        "fourier-mukai" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let i = p.need_usize(id, "i")?;
            let m = p.need_usize(id, "m")?;
            let d_set = p.need(id, "d-set")?;
            let s1 = p.need(id, "s1")?;
            let s2 = p.need(id, "s2")?;
            let r = scenario_bound(&MapScenario::FourierMukai {
                k,
                m,
                d,
                d_set,
                s1,
                s2,
                i,
            })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("i", i.to_string()),
                    ("m", m.to_string()),
                    ("d-set", d_set.to_string()),
                    ("s1", s1.to_string()),
                    ("s2", s2.to_string()),
                ]),
            ))
        }
        "transversal" => {
            let d = p.need(id, "d")?;
            let k = p.need_usize(id, "k")?;
            let s = p.need(id, "s")?;
            let i = p.need_usize(id, "i")?;
            let k_prime = p.need_usize(id, "k-prime")?;
            let r = scenario_bound(&MapScenario::Transversal {
                k,
                k_prime,
                d,
                s,
                i,
            })?;
            Ok((
                r,
                pairs(&[
                    ("d", d.to_string()),
                    ("k", k.to_string()),
                    ("s", s.to_string()),
                    ("i", i.to_string()),
                    ("k-prime", k_prime.to_string()),
                ]),
            ))
        }
        _ => Err(unknown(id)),
    }
}

pub fn run(args: &BoundArgs, ctx: &Ctx) -> Result<(), CliError> {
    // Surface an unknown id before any parameter diagnostics.
    if !known_ids().contains(&args.id.as_str()) {
        return Err(unknown(&args.id));
    }
    let spec = args.params.to_spec(ctx.cfg)?;
    let cells = expand(&spec, ctx.allow_large)?;
    let rows: Vec<Result<ReportRow, CliError>> = map_cells(&cells, |cell| {
        evaluate_id(&args.id, cell).map(|(result, params)| row_from_bound(&args.id, params, &result))
    });
    let rows: Vec<ReportRow> = rows.into_iter().collect::<Result<_, _>>()?;
    emit_rows(&rows, ctx.format, ctx.out)
}
