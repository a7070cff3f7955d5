//! The `asymptotic` subcommand: exact tables that witness growth regimes.
//!
//! Default mode: the leading coefficient (in k^(l-1), degree → ∞) of the
//! alternating-sum variety bound against the classical one. Quadrics mode
//! (`--quadrics-l L`): the deviation of the projective-quadrics Betti total
//! from its main term 2^(l-2)·C(k,l-1), normalized by k^(l-2), which stays
//! bounded as k grows.

use bound_catalog::leading_coefficient_comparison;
use combinat_core::binomial;
use generic_chi::quadrics_projective;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cli::AsymptoticArgs;
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::emit_rows;
use crate::render::{render_scalar, ReportRow};
use crate::sweep::RangeArg;

fn leading_table(range: RangeArg) -> Result<Vec<ReportRow>, CliError> {
    if range.lo < 1 {
        return Err(CliError::hypothesis(
            "the leading-coefficient table needs l >= 1".to_string(),
        ));
    }
    Ok(range
        .values()
        .map(|ell| {
            let (ours, classical) = leading_coefficient_comparison(ell as usize);
            let regime = if ours < classical {
                "alternating-sum coefficient below classical"
            } else {
                "classical coefficient at or below alternating-sum"
            };
            ReportRow {
                id: "leading-coefficient".to_string(),
                parameters: format!("l={ell}"),
                value: render_scalar(&ours),
                notes: format!("classical = {}; {regime}", render_scalar(&classical)),
                citation: "total-degree".to_string(),
            }
        })
        .collect())
}

fn quadrics_table(ell: u64, k_range: Option<RangeArg>) -> Result<Vec<ReportRow>, CliError> {
    if ell < 2 {
        return Err(CliError::hypothesis(
            "the quadrics deviation table needs l >= 2".to_string(),
        ));
    }
    let k_range = k_range.unwrap_or(RangeArg {
        lo: ell + 1,
        hi: 40,
    });
    if k_range.lo <= ell {
        return Err(CliError::hypothesis(format!(
            "the deviation is defined for k > l; got k starting at {} with l = {ell}",
            k_range.lo
        )));
    }
    let ell = ell as usize;
    let mut rows = Vec::new();
    for k in k_range.values() {
        let report = quadrics_projective(k as usize, ell)?;
        let main_term =
            BigInt::from(2u32).pow(ell as u32 - 2) * binomial(k as i64, ell as i64 - 1);
        let deviation = BigRational::from(report.betti_sum.clone() - &main_term).abs()
            / BigRational::from(BigInt::from(k).pow(ell as u32 - 2));
        rows.push(ReportRow {
            id: "projective-quadrics-growth".to_string(),
            parameters: format!("l={ell} k={k}"),
            value: render_scalar(&deviation),
            notes: format!(
                "betti total = {}; main term = {main_term}; deviation normalized by k^{}",
                report.betti_sum,
                ell - 2
            ),
            citation: "projective-quadrics".to_string(),
        });
    }
    Ok(rows)
}

pub fn run(args: &AsymptoticArgs, ctx: &Ctx) -> Result<(), CliError> {
    let rows = match args.quadrics_l {
        Some(ell) => quadrics_table(ell, args.k)?,
        None => leading_table(args.l.unwrap_or(RangeArg { lo: 2, hi: 12 }))?,
    };
    emit_rows(&rows, ctx.format, ctx.out)
}
