//! Report emission: CSV (RFC 4180, via the `csv` crate) or JSON with every
//! value as a string, so exact rationals survive any consumer. Output is
//! buffered fully and written in one pass; two runs with the same arguments
//! produce byte-identical bytes.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use crate::cli::Format;
use crate::error::CliError;
use crate::render::ReportRow;

/// JSON schema marker carried by every JSON report.
pub const SCHEMA: u32 = 1;

pub fn rows_to_csv<S: Serialize>(rows: &[S]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| CliError::Failed(format!("csv encoding failed: {e}")))?;
    }
    w.into_inner()
        .map_err(|e| CliError::Failed(format!("csv encoding failed: {e}")))
}

pub fn rows_to_json<S: Serialize>(rows: &[S]) -> Result<Vec<u8>, CliError> {
    let doc = json!({ "schema": SCHEMA, "rows": rows });
    let mut bytes = serde_json::to_vec(&doc)
        .map_err(|e| CliError::Failed(format!("json encoding failed: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Encodes a free-shape table: CSV gets `header` + `rows`; JSON gets one
/// object per row with the header entries as keys.
pub fn table_to_bytes(
    header: &[String],
    rows: &[Vec<String>],
    format: Format,
) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)
                .map_err(|e| CliError::Failed(format!("csv encoding failed: {e}")))?;
            for row in rows {
                w.write_record(row)
                    .map_err(|e| CliError::Failed(format!("csv encoding failed: {e}")))?;
            }
            w.into_inner()
                .map_err(|e| CliError::Failed(format!("csv encoding failed: {e}")))
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.clone(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            rows_to_json(&objects)
        }
    }
}

/// Writes the encoded report to `--out` or stdout.
pub fn write_output(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

/// Standard emission path for [`ReportRow`] reports.
pub fn emit_rows(rows: &[ReportRow], format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let bytes = match format {
        Format::Csv => rows_to_csv(rows)?,
        Format::Json => rows_to_json(rows)?,
    };
    write_output(&bytes, out)
}
