//! Output files: a manifest block followed by one or more named tables.
//!
//! CSV layout:
//!
//! ```text
//! # oscillab report
//! # command: evolve
//! # version: 0.1.0
//! # tolerance: 1e-12
//! # param N=7
//! # param tau=1
//! # table: energies
//! n,energy,eigenvalue_re,eigenvalue_im
//! 0,0.4487989505128276,...
//! ```
//!
//! JSON mirrors it as `{"manifest": {...}, "tables": {"name": [{col: value}]}}`.

use std::fmt::Write as _;

use serde_json::{json, Map, Value as Json};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Value {
    fn csv(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Float(v) => float_text(*v),
            Value::Text(v) => {
                if v.contains(',') || v.contains('"') {
                    format!("\"{}\"", v.replace('"', "\"\""))
                } else {
                    v.clone()
                }
            }
            Value::Bool(v) => v.to_string(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Int(v) => json!(v),
            Value::Float(v) => json!(v),
            Value::Text(v) => json!(v),
            Value::Bool(v) => json!(v),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Int(v) => Some(*v as f64),
            Value::Float(v) => Some(*v),
            _ => None,
        }
    }
}

/// Shortest round-trip text; scientific outside `[1e-4, 1e16)`.
fn float_text(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len(), "table {}", self.name);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Value>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }
}

/// Resolved run configuration, echoed at the top of every output file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub config: RunConfig,
    pub tables: Vec<Table>,
    /// Failed checks, one human-readable line each.
    pub breaches: Vec<String>,
}

impl Report {
    pub fn new(command: &str, tolerance: f64) -> Self {
        Self {
            config: RunConfig {
                command: command.to_string(),
                parameters: Vec::new(),
                tolerance,
            },
            tables: Vec::new(),
            breaches: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.config
            .parameters
            .push((key.to_string(), value.to_string()));
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// Records `check` as breached when `residual` exceeds `limit`.
    pub fn expect_below(&mut self, check: &str, residual: f64, limit: f64) -> bool {
        let ok = residual <= limit;
        if !ok {
            self.breaches
                .push(format!("{check}: residual {residual:e} exceeds {limit:e}"));
        }
        ok
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("# oscillab report\n");
        let _ = writeln!(out, "# command: {}", self.config.command);
        let _ = writeln!(out, "# version: {VERSION}");
        let _ = writeln!(out, "# tolerance: {:e}", self.config.tolerance);
        for (k, v) in &self.config.parameters {
            let _ = writeln!(out, "# param {k}={v}");
        }
        for table in &self.tables {
            let _ = writeln!(out, "# table: {}", table.name);
            out.push_str(&table.columns.join(","));
            out.push('\n');
            for row in &table.rows {
                let cells: Vec<String> = row.iter().map(Value::csv).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut params = Map::new();
        for (k, v) in &self.config.parameters {
            params.insert(k.clone(), json!(v));
        }
        let mut tables = Map::new();
        for table in &self.tables {
            let rows: Vec<Json> = table
                .rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (col, v) in table.columns.iter().zip(row) {
                        obj.insert(col.clone(), v.json());
                    }
                    Json::Object(obj)
                })
                .collect();
            tables.insert(table.name.clone(), Json::Array(rows));
        }
        let doc = json!({
            "manifest": {
                "command": self.config.command,
                "version": VERSION,
                "tolerance": self.config.tolerance,
                "parameters": Json::Object(params),
            },
            "tables": Json::Object(tables),
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }
}
