use std::fmt;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use spw_core::stringdata::CensusRow;

pub const SCHEMA: &str = "spw-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Porta,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Porta => "porta",
            Format::Text => "text",
        };
        f.write_str(s)
    }
}

#[derive(Debug)]
pub struct UnsupportedFormat {
    pub command: String,
    pub format: Format,
}

impl fmt::Display for UnsupportedFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "format {} is not available for {}", self.format, self.command)
    }
}

impl std::error::Error for UnsupportedFormat {}

/// The structured result of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input: Map<String, Value>,
    pub provenance: Option<String>,
    pub result: Value,
    /// Per-word rows, for CSV.
    pub rows: Option<Vec<CensusRow>>,
    /// PORTA text, when the command has a polyhedron to show.
    pub porta: Option<String>,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, input: Map<String, Value>, result: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            provenance: None,
            result,
            rows: None,
            porta: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("status".into(), json!("ok"));
        m.insert("command".into(), json!(self.command));
        m.insert("input".into(), Value::Object(self.input.clone()));
        if let Some(p) = &self.provenance {
            m.insert("provenance".into(), json!(p));
        }
        m.insert("result".into(), self.result.clone());
        if let Some(t) = self.timing_ms {
            m.insert("timing_ms".into(), json!(t));
        }
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        let unsupported = || UnsupportedFormat {
            command: self.command.clone(),
            format,
        };
        match format {
            Format::Json => Ok(pretty(&self.to_json())),
            Format::Text => {
                let mut lines = Vec::new();
                flatten("", &self.to_json(), &mut lines);
                Ok(lines.join("\n") + "\n")
            }
            Format::Porta => self.porta.clone().ok_or_else(|| unsupported().into()),
            Format::Csv => {
                let rows = self.rows.as_ref().ok_or_else(unsupported)?;
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in rows {
                    w.serialize(r)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => serde_json::to_string(v).expect("values serialize"),
        other => other.to_string(),
    }
}

/// `key.sub: value` lines; arrays of scalars stay on one line.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

/// A failure report in the JSON schema.
pub fn error_json(e: &anyhow::Error, code: i32) -> String {
    pretty(&json!({
        "schema": SCHEMA,
        "status": "error",
        "exit_code": code,
        "error": format!("{e:#}"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_lines_follow_key_order() {
        let mut r = Report::new("info", Map::new(), json!({"b": [1, 2], "a": {"x": "1/2"}}));
        r.provenance = Some("builtin-GT-A".into());
        let text = r.render(Format::Text).unwrap();
        assert!(text.contains("result.a.x: 1/2\nresult.b: [1, 2]\n"));
        assert!(text.contains("provenance: builtin-GT-A"));
        assert!(r.render(Format::Csv).is_err());
        assert!(r.render(Format::Porta).is_err());
    }
}
