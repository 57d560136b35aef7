//! Table, CSV and JSON renderings of a [`ScenarioReport`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::{Column, ScenarioReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmitError {
    #[error("csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error("json: {0}")]
    Json(String),
}

/// Shortest round-trip scientific form, padded to at least six significant digits.
pub fn format_sci(x: f64) -> String {
    let s = format!("{x:e}");
    let Some((mantissa, exponent)) = s.split_once('e') else {
        return s;
    };
    let digits = mantissa.bytes().filter(u8::is_ascii_digit).count();
    if digits >= 6 {
        return s;
    }
    let mut m = mantissa.to_string();
    if !m.contains('.') {
        m.push('.');
    }
    m.extend(std::iter::repeat_n('0', 6 - digits));
    format!("{m}e{exponent}")
}

/// Just the numeric table; what CSV carries and what converts to and from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DataTable {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<f64>>,
}

impl DataTable {
    pub fn of(report: &ScenarioReport) -> Self {
        Self { columns: report.columns.clone(), rows: report.rows.clone() }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.iter().map(Column::header).collect::<Vec<_>>().join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(|v| format_sci(*v)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, EmitError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(EmitError::Csv { line: 1, reason: "empty document".into() })?;
        let columns = header
            .split(',')
            .map(|h| {
                Column::from_header(h)
                    .ok_or_else(|| EmitError::Csv { line: 1, reason: format!("header `{h}` is not `name [unit]`") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows = Vec::new();
        for (i, line) in lines {
            let row = line
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| EmitError::Csv { line: i + 1, reason: format!("`{v}` is not a number") })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != columns.len() {
                return Err(EmitError::Csv {
                    line: i + 1,
                    reason: format!("{} fields, header has {}", row.len(), columns.len()),
                });
            }
            rows.push(row);
        }
        Ok(Self { columns, rows })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    /// Accepts either a bare table or a full report; extra fields are ignored.
    pub fn from_json(text: &str) -> Result<Self, EmitError> {
        serde_json::from_str(text).map_err(|e| EmitError::Json(e.to_string()))
    }
}

pub fn csv_to_json(csv: &str) -> Result<String, EmitError> {
    Ok(DataTable::from_csv(csv)?.to_json())
}

pub fn json_to_csv(json: &str) -> Result<String, EmitError> {
    Ok(DataTable::from_json(json)?.to_csv())
}

const MIN_WIDTH: usize = 14;

fn render_table(report: &ScenarioReport) -> String {
    let headers: Vec<String> = report.columns.iter().map(Column::header).collect();
    let widths: Vec<usize> = headers.iter().map(|h| h.len().max(MIN_WIDTH)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}   tags: {}", report.scenario, report.request.tags.join(", "));
    let line: Vec<String> = headers.iter().zip(&widths).map(|(h, w)| format!("{h:>w$}")).collect();
    let _ = writeln!(out, "{}", line.join("  "));
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let _ = writeln!(out, "{}", rule.join("  "));
    for row in &report.rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(v, w)| format!("{v:>w$.6e}")).collect();
        let _ = writeln!(out, "{}", cells.join("  "));
    }
    if !report.residuals.is_empty() {
        let _ = writeln!(out, "\nresiduals (max over rows):");
        for r in &report.residuals {
            let _ = writeln!(out, "  {:<28} {:>14.6e} [{}]", r.name, r.max_abs, r.unit);
        }
    }
    let _ = writeln!(out, "\nprovenance:");
    for p in &report.provenance {
        let _ = writeln!(out, "  {p}");
    }
    out
}

pub fn emit(report: &ScenarioReport, format: Format) -> Vec<u8> {
    match format {
        Format::Table => render_table(report).into_bytes(),
        Format::Csv => DataTable::of(report).to_csv().into_bytes(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
    }
}
