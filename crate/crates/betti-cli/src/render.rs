//! Report rows and exact rendering of values.
//!
//! Every value is rendered as a decimal string — `"p/q"` for non-integers —
//! and must round-trip through [`num_rational::BigRational`] without loss.
//! No floating point is involved anywhere.

use bound_catalog::BoundResult;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

/// One evaluated cell of a report: which formula, at which parameters, what
/// it evaluated to, and under which caveats.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    /// Stable identifier of the evaluated formula.
    pub id: String,
    /// The consumed parameters, rendered as `name=value` pairs separated by
    /// single spaces, in a fixed order.
    pub parameters: String,
    /// Exact value as a decimal string (`"p/q"` when not an integer).
    pub value: String,
    /// Branch taken and standing assumptions, `;`-separated. Empty when the
    /// value is unconditional.
    pub notes: String,
    /// Identifier of the formula family the value came from.
    pub citation: String,
}

/// Renders `name=value` pairs separated by single spaces.
pub fn pairs(parts: &[(&str, String)]) -> String {
    parts
        .iter()
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn join_u64s(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn join_matrix(rows: &[Vec<u64>]) -> String {
    rows.iter()
        .map(|r| join_u64s(r))
        .collect::<Vec<_>>()
        .join(";")
}

/// Renders an exact rational: plain decimal when integral, `"p/q"` otherwise.
/// `BigRational` keeps itself reduced, so the rendering is canonical.
pub fn render_scalar(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        v.to_string()
    }
}

pub fn render_int(v: &BigInt) -> String {
    v.to_string()
}

/// Joins the branch and assumptions of a [`BoundResult`] into the notes
/// column, flagging whether the value is attained exactly or is an upper
/// bound.
pub fn notes_from(result: &BoundResult) -> String {
    let mut parts: Vec<String> = Vec::new();
    parts.push(if result.exact {
        "exact".to_string()
    } else {
        "upper bound".to_string()
    });
    if let Some(branch) = &result.branch {
        parts.push(format!("branch: {branch}"));
    }
    for assumption in &result.assumptions {
        parts.push(format!("assumes: {assumption}"));
    }
    parts.join("; ")
}

/// Builds the full row for an evaluated bound.
pub fn row_from_bound(id: &str, parameters: String, result: &BoundResult) -> ReportRow {
    ReportRow {
        id: id.to_string(),
        parameters,
        value: render_scalar(&result.value),
        notes: notes_from(result),
        citation: result.citation.to_string(),
    }
}
