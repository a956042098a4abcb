//! Report records and their CSV / JSON renderings.
//!
//! Every value is carried as an exact decimal (or `p/q`) string, so the two
//! renderings hold the same information.

use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: String,
    pub aggregate_pass: bool,
    pub warnings: Vec<String>,
    /// Scalar results in insertion order.
    pub summary: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl OutputRecord {
    pub fn new(command: String, columns: Vec<&'static str>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            aggregate_pass: true,
            warnings: Vec::new(),
            summary: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn summary(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.to_string(), value.to_string()));
    }

    pub fn row(&mut self, values: Vec<String>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Metadata and summary as `# key=value` lines, then a header and one
    /// line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# schema_version={}", self.schema_version);
        let _ = writeln!(out, "# command={}", self.command);
        let _ = writeln!(out, "# aggregate_pass={}", self.aggregate_pass);
        for w in &self.warnings {
            let _ = writeln!(out, "# warning={w}");
        }
        for (k, v) in &self.summary {
            let _ = writeln!(out, "# {k}={v}");
        }
        if !self.columns.is_empty() {
            out.push_str(&self.columns.join(","));
            out.push('\n');
            for row in &self.rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let summary: Map<String, Value> =
            self.summary.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.to_string(), Value::String(v.clone())))
                        .collect(),
                )
            })
            .collect();
        let doc = serde_json::json!({
            "schema_version": self.schema_version,
            "command": self.command,
            "aggregate_pass": self.aggregate_pass,
            "warnings": self.warnings,
            "summary": summary,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json value serializes");
        s.push('\n');
        s
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
