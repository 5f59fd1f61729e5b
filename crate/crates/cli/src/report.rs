use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

/// A finished subcommand: what to print and whether the math checked out.
pub struct Report {
    pub command: &'static str,
    pub result: Value,
    /// Overrides the generic key/value rendering.
    pub table: Option<String>,
    pub csv: Option<String>,
    /// Set when a verification failed; the message names the residual.
    pub failure: Option<String>,
    /// Defaults filled in by the library, reported next to the flags.
    pub resolved: serde_json::Map<String, Value>,
}

impl Report {
    pub fn new<T: Serialize>(command: &'static str, result: &T) -> anyhow::Result<Self> {
        Ok(Report { command, result: serde_json::to_value(result)?, table: None, csv: None, failure: None, resolved: Default::default() })
    }

    pub fn table(mut self, text: String) -> Self {
        self.table = Some(text);
        self
    }

    pub fn csv(mut self, text: String) -> Self {
        self.csv = Some(text);
        self
    }

    pub fn resolve<T: Serialize>(mut self, key: &str, value: T) -> anyhow::Result<Self> {
        self.resolved.insert(key.to_string(), serde_json::to_value(value)?);
        Ok(self)
    }

    pub fn render(&self, format: Format, config: &Value) -> anyhow::Result<String> {
        Ok(match format {
            Format::Json => {
                let doc = json!({
                    "tool": env!("CARGO_BIN_NAME"),
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": self.command,
                    "config": with_resolved(config, &self.resolved),
                    "result": self.result,
                });
                serde_json::to_string_pretty(&doc)? + "\n"
            }
            Format::Table => match &self.table {
                Some(t) => t.clone(),
                None => {
                    let rows = flatten(&self.result);
                    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    rows.iter().fold(String::new(), |mut s, (k, v)| {
                        let _ = writeln!(s, "{k:<width$}  {v}");
                        s
                    })
                }
            },
            Format::Csv => match &self.csv {
                Some(c) => c.clone(),
                None => flatten(&self.result).iter().fold(String::from("key,value\n"), |mut s, (k, v)| {
                    let _ = writeln!(s, "{k},{}", csv_field(v));
                    s
                }),
            },
        })
    }
}

fn with_resolved(config: &Value, resolved: &serde_json::Map<String, Value>) -> Value {
    let mut config = config.clone();
    if let (Value::Object(map), false) = (&mut config, resolved.is_empty()) {
        map.insert("resolved".into(), Value::Object(resolved.clone()));
    }
    config
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Dotted keys for nested objects; arrays of scalars stay on one line.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(v, String::new(), &mut out);
    out
}

fn walk(v: &Value, key: String, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if key.is_empty() { k.to_string() } else { format!("{key}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| walk(v, join(k), out)),
        Value::Array(items) => {
            if let Some(parts) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push((key, parts.join(" ")));
            } else {
                items.iter().enumerate().for_each(|(i, v)| walk(v, join(&i.to_string()), out));
            }
        }
        other => out.push((key, scalar(other).unwrap_or_default())),
    }
}
