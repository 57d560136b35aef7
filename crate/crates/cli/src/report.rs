use serde::{Deserialize, Serialize};

use crate::config::{ScenarioRequest, Sweep};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

impl Column {
    /// `name [unit]`, as used in CSV and table headers.
    pub fn header(&self) -> String {
        format!("{} [{}]", self.name, self.unit)
    }

    pub fn from_header(header: &str) -> Option<Self> {
        let (name, rest) = header.trim().rsplit_once(" [")?;
        let unit = rest.strip_suffix(']')?;
        Some(Self { name: name.to_string(), unit: unit.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamEcho {
    pub key: String,
    pub value: f64,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RequestEcho {
    pub scenario: String,
    pub tags: Vec<String>,
    pub params: Vec<ParamEcho>,
    pub sweep: Option<Sweep>,
}

impl RequestEcho {
    pub fn of(req: &ScenarioRequest) -> Self {
        Self {
            scenario: req.scenario.name().to_string(),
            tags: req.tags.iter().map(|t| t.name().to_string()).collect(),
            params: req
                .params
                .iter()
                .map(|(k, v)| ParamEcho { key: k.clone(), value: *v, unit: req.unit_of(k).to_string() })
                .collect(),
            sweep: req.sweep.clone(),
        }
    }
}

/// Largest magnitude of one residual column over all rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSummary {
    pub name: String,
    pub unit: String,
    pub max_abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub request: RequestEcho,
    pub columns: Vec<Column>,
    /// One row per sweep point, in request order.
    pub rows: Vec<Vec<f64>>,
    pub residuals: Vec<ResidualSummary>,
    pub provenance: Vec<String>,
}

impl ScenarioReport {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Values of one column, or `None` if absent.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

/// Prefix marking columns that hold cross-check residuals.
pub const RESIDUAL_PREFIX: &str = "residual_";

pub(crate) fn summarize_residuals(columns: &[Column], rows: &[Vec<f64>]) -> Vec<ResidualSummary> {
    columns
        .iter()
        .enumerate()
        .filter(|(_, c)| c.name.starts_with(RESIDUAL_PREFIX))
        .map(|(i, c)| ResidualSummary {
            name: c.name.clone(),
            unit: c.unit.clone(),
            max_abs: rows.iter().map(|r| r[i].abs()).fold(0.0, f64::max),
        })
        .collect()
}
