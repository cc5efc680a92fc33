//! Command output in JSON, CSV or table form.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::args::Format;

pub type Row = Map<String, Value>;

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub config: Row,
    pub results: Vec<Row>,
    pub pass: bool,
    pub worst_residual: f64,
    /// Summary fields beyond `pass` and `worst_residual`.
    pub summary: Row,
    /// Rows shown in table form; `None` shows all of them.
    pub table_rows: Option<Vec<usize>>,
}

pub fn cx(z: Complex64) -> Value {
    json!([z.re, z.im])
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(self.json()),
            Format::Csv => self.csv(),
            Format::Table => Ok(self.table()),
        }
    }

    fn summary_value(&self) -> Value {
        let mut summary = Row::new();
        summary.insert("pass".into(), self.pass.into());
        summary.insert("worst_residual".into(), self.worst_residual.into());
        summary.extend(self.summary.clone());
        Value::Object(summary)
    }

    fn json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "config": self.config,
            "results": self.results,
            "summary": self.summary_value(),
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
        out.push('\n');
        out
    }

    fn csv(&self) -> Result<String, String> {
        let flat: Vec<Vec<(String, String)>> = self.results.iter().map(flatten).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(first) = flat.first() {
            w.write_record(first.iter().map(|(k, _)| k))
                .map_err(|e| e.to_string())?;
        }
        for row in &flat {
            w.write_record(row.iter().map(|(_, v)| v))
                .map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let config: Vec<String> = flatten(&self.config)
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "{} {}", self.command, config.join(" "));

        let shown: Vec<&Row> = match &self.table_rows {
            None => self.results.iter().collect(),
            Some(idx) => idx.iter().map(|&i| &self.results[i]).collect(),
        };
        if let Some(first) = shown.first() {
            let header: Vec<String> = flatten(first).into_iter().map(|(k, _)| k).collect();
            let cells: Vec<Vec<String>> = shown
                .iter()
                .map(|r| flatten_pretty(r).into_iter().map(|(_, v)| v).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|row| row[j].len())
                        .chain([header[j].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: &[String]| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", line(&header));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        if self.table_rows.is_some() {
            let _ = writeln!(
                out,
                "({} of {} rows shown)",
                shown.len(),
                self.results.len()
            );
        }
        let summary: Vec<String> = flatten_pretty(self.summary_value().as_object().unwrap())
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "{} {}",
            if self.pass { "PASS" } else { "FAIL" },
            summary.join(" ")
        );
        out
    }
}

/// Nested objects become `outer.inner`; `[re, im]` pairs become `key.re`, `key.im`.
fn flatten_with(row: &Row, num: &dyn Fn(&Value) -> String) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (k, v) in row {
        match v {
            Value::Object(inner) => {
                for (ik, iv) in flatten_with(inner, num) {
                    out.push((format!("{k}.{ik}"), iv));
                }
            }
            Value::Array(items) if items.len() == 2 && items.iter().all(Value::is_number) => {
                out.push((format!("{k}.re"), num(&items[0])));
                out.push((format!("{k}.im"), num(&items[1])));
            }
            Value::Array(items) => {
                let joined: Vec<String> = items.iter().map(num).collect();
                out.push((k.clone(), joined.join(";")));
            }
            other => out.push((k.clone(), num(other))),
        }
    }
    out
}

fn flatten(row: &Row) -> Vec<(String, String)> {
    flatten_with(row, &scalar)
}

fn flatten_pretty(row: &Row) -> Vec<(String, String)> {
    flatten_with(row, &|v| match v.as_f64() {
        Some(x) if v.is_f64() => short(x),
        _ => scalar(v),
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn short(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if !(1e-4..1e6).contains(&x.abs()) {
        format!("{x:.6e}")
    } else {
        let s = format!("{x:.9}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}
