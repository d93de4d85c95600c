//! Report documents and their table, JSON and CSV renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub type_name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    /// Wall time, only recorded on request so that output stays reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub metadata: Metadata,
    pub rows: Vec<Value>,
    pub warnings: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: &str, type_name: Option<String>) -> Self {
        ReportDocument {
            metadata: Metadata {
                tool: "wonderkit".into(),
                version: env!("CARGO_PKG_VERSION").into(),
                command: command.into(),
                type_name,
                seed: None,
                timing_ms: None,
            },
            rows: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push<T: Serialize>(&mut self, row: &T) {
        self.rows.push(serde_json::to_value(row).expect("rows serialize"));
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Vec::new();
        for r in &self.rows {
            if let Value::Object(m) = r {
                for k in m.keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
        }
        if cols.is_empty() && !self.rows.is_empty() {
            cols.push("value".into());
        }
        cols
    }

    fn cells(&self, cols: &[String]) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| match r {
                Value::Object(m) => cols.iter().map(|c| m.get(c).map(cell).unwrap_or_default()).collect(),
                other => vec![cell(other)],
            })
            .collect()
    }

    /// RFC 4180 CSV of the rows; nested values are written as compact JSON.
    pub fn to_csv(&self) -> String {
        let cols = self.columns();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&cols).expect("in-memory write");
        for row in self.cells(&cols) {
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    /// Aligned plain-text table followed by warnings.
    pub fn to_table(&self) -> String {
        let cols = self.columns();
        let rows = self.cells(&cols);
        let mut width: Vec<usize> = cols.iter().map(|c| c.chars().count()).collect();
        for r in &rows {
            for (i, c) in r.iter().enumerate() {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
            parts.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        if !cols.is_empty() {
            writeln!(out, "{}", line(&cols)).unwrap();
            for r in &rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_csv() {
        let mut d = ReportDocument::new("roots", Some("A1".into()));
        d.push(&json!({"root": [1], "height": 1}));
        d.push(&json!({"root": [-1], "height": -1}));
        d.warn("note, with comma");
        let back: ReportDocument = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(d.to_csv(), "root,height\n[1],1\n[-1],-1\n");
        assert!(d.to_table().contains("warning: note, with comma"));
    }
}
