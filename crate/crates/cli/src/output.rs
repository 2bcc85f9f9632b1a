use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::config::Format;

/// 17 significant digits, `.` decimal.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// Column value: a number, text, or empty.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => num(*x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// A table of records plus metadata and an optional fit block.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Value,
    /// Key/value pairs of the fit block; written as CSV footer lines.
    pub fit: Vec<(&'static str, Option<f64>)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>, meta: Value) -> Self {
        Table { columns, rows: Vec::new(), meta, fit: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::csv))?;
        }
        let mut out = String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8");
        for (k, v) in &self.fit {
            let v = v.map_or_else(|| "none".to_string(), num);
            out.push_str(&format!("# {k}={v}\n"));
        }
        if let Some(c) = self.meta.get("config") {
            out.push_str(&format!("# config={c}\n"));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> =
                    self.columns.iter().zip(r).map(|(k, c)| (k.to_string(), c.json())).collect();
                Value::Object(m)
            })
            .collect();
        let fit = if self.fit.is_empty() {
            Value::Null
        } else {
            Value::Object(self.fit.iter().map(|(k, v)| (k.to_string(), v.map_or(Value::Null, |x| json!(x)))).collect())
        };
        let doc = json!({ "meta": self.meta, "records": records, "fit": fit });
        let mut s = serde_json::to_string_pretty(&doc).expect("json serialisation");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Csv => self.to_csv().map_err(|e| e.to_string()),
            Format::Json => Ok(self.to_json()),
        }
    }
}

/// Write the whole document in one go, to `path` or stdout.
pub fn emit(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
