//! Tabular results and their CSV and JSON encodings.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(usize),
    Text(&'static str),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            // 17 significant digits round-trip every f64
            Cell::Num(v) => format!("{v:.16e}"),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => (*s).to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => json!(v),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Cell::Num(v) if !v.is_finite())
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConfigMeta {
    pub b0: f64,
    pub k: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct TruncationMeta {
    pub states: usize,
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub max_tail_bound: Option<f64>,
}

impl TruncationMeta {
    pub fn record(&mut self, order: usize, tail: f64) {
        self.states += 1;
        self.min_order = Some(self.min_order.map_or(order, |m| m.min(order)));
        self.max_order = Some(self.max_order.map_or(order, |m| m.max(order)));
        self.max_tail_bound = Some(self.max_tail_bound.map_or(tail, |m| m.max(tail)));
    }
}

/// A failed grid point; the rest of the grid is still emitted.
#[derive(Debug, Clone, Serialize)]
pub struct RowError {
    pub point: String,
    pub message: String,
    #[serde(skip)]
    pub exit_code: i32,
}

#[derive(Debug, Clone)]
pub struct GridResult {
    pub command: &'static str,
    pub family: &'static str,
    pub config: ConfigMeta,
    pub tol: f64,
    pub truncation: TruncationMeta,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub errors: Vec<RowError>,
}

impl GridResult {
    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.into_error()))
    }

    pub fn to_json(&self) -> Result<Vec<u8>, CliError> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let doc = json!({
            "command": self.command,
            "family": self.family,
            "config": self.config,
            "tol": self.tol,
            "truncation": self.truncation,
            "columns": self.columns,
            "rows": rows,
            "errors": self.errors,
        });
        let mut out = serde_json::to_vec_pretty(&doc)?;
        out.push(b'\n');
        Ok(out)
    }
}
