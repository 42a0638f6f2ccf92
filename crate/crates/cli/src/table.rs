use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;
use crate::CliError;

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:.16e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Rows under a fixed header; CSV numbers carry 17 significant digits.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Config(format!("csv: {e}"));
        w.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        w.into_inner().map_err(|e| CliError::Config(format!("csv: {e}")))
    }

    fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.header.iter().map(|h| h.to_string()).zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

pub struct Sink<'a> {
    pub format: Format,
    pub out: Option<&'a Path>,
}

impl Sink<'_> {
    pub fn write(&self, bytes: &[u8]) -> Result<(), CliError> {
        match self.out {
            Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Output {
                path: path.display().to_string(),
                source,
            }),
            None => std::io::stdout().write_all(bytes).map_err(|source| CliError::Output {
                path: "stdout".into(),
                source,
            }),
        }
    }

    fn json_bytes(v: &impl Serialize) -> Result<Vec<u8>, CliError> {
        let mut b = serde_json::to_vec_pretty(v).map_err(|e| CliError::Config(format!("json: {e}")))?;
        b.push(b'\n');
        Ok(b)
    }

    pub fn table(&self, t: &Table) -> Result<(), CliError> {
        match self.format {
            Format::Csv => self.write(&t.to_csv()?),
            Format::Json => self.write(&Self::json_bytes(&t.to_json())?),
        }
    }

    /// The table as CSV, or `full` serialized as JSON.
    pub fn table_or(&self, t: &Table, full: &impl Serialize) -> Result<(), CliError> {
        match self.format {
            Format::Csv => self.write(&t.to_csv()?),
            Format::Json => self.write(&Self::json_bytes(full)?),
        }
    }
}
