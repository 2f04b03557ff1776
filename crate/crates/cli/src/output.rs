//! Rendering of command results as JSON, CSV or plain text.
//!
//! Exact values are always emitted as strings (`p/q` or a decimal integer)
//! so that no consumer loses precision.

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Value,
    Row,
    Report,
    Bench,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Value => "value",
            Kind::Row => "row",
            Kind::Report => "report",
            Kind::Bench => "bench",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Float(f64),
    Bool(bool),
    Null,
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(*v),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }

    fn to_text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.3}"),
            Cell::Bool(true) => "pass".to_string(),
            Cell::Bool(false) => "FAIL".to_string(),
            Cell::Null => String::new(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Bool(b) => b.to_string(),
            other => other.to_text(),
        }
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// Rows are either bare values (kinds `value` and `row`) or records with
/// named columns.
#[derive(Debug, Clone, PartialEq)]
pub enum Rows {
    Values(Vec<String>),
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Cell>>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub kind: Kind,
    pub identity: Option<String>,
    pub sequence: Option<String>,
    pub rows: Rows,
    pub all_pass: Option<bool>,
}

impl OutputRecord {
    pub fn values(kind: Kind, sequence: &str, values: Vec<String>) -> Self {
        OutputRecord {
            kind,
            identity: None,
            sequence: Some(sequence.to_string()),
            rows: Rows::Values(values),
            all_pass: None,
        }
    }

    pub fn table(kind: Kind, columns: Vec<&'static str>, rows: Vec<Vec<Cell>>) -> Self {
        OutputRecord {
            kind,
            identity: None,
            sequence: None,
            rows: Rows::Table { columns, rows },
            all_pass: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("kind".into(), Value::from(self.kind.as_str()));
        if let Some(id) = &self.identity {
            top.insert("identity".into(), Value::from(id.as_str()));
        }
        if let Some(seq) = &self.sequence {
            top.insert("sequence".into(), Value::from(seq.as_str()));
        }
        let rows = match &self.rows {
            Rows::Values(v) => v.iter().map(|s| Value::from(s.as_str())).collect(),
            Rows::Table { columns, rows } => rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(c, cell)| (c.to_string(), cell.to_json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        };
        top.insert("rows".into(), Value::Array(rows));
        if let Some(p) = self.all_pass {
            top.insert("all_pass".into(), Value::Bool(p));
        }
        Value::Object(top)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    fn render_csv(&self) -> String {
        match &self.rows {
            Rows::Values(v) => format!("{}\n", v.join(",")),
            Rows::Table { columns, rows } => {
                let mut out = columns.join(",");
                out.push('\n');
                for row in rows {
                    let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
        }
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        match &self.rows {
            Rows::Values(v) => {
                for s in v {
                    out.push_str(s);
                    out.push('\n');
                }
            }
            Rows::Table { columns, rows } => {
                for row in rows {
                    let fields: Vec<String> = columns
                        .iter()
                        .zip(row)
                        .filter(|(_, cell)| **cell != Cell::Null)
                        .map(|(c, cell)| match cell {
                            Cell::Bool(_) => cell.to_text(),
                            _ => format!("{c}={}", cell.to_text()),
                        })
                        .collect();
                    out.push_str(&fields.join(" "));
                    out.push('\n');
                }
                if let Some(p) = self.all_pass {
                    out.push_str(&format!("all_pass={p}\n"));
                }
            }
        }
        out
    }
}
