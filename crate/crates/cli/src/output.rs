//! Output records and their text, JSON and CSV renderings.
//!
//! JSON keys are always `command`, `inputs`, `results`, `regime`, `warnings`.
//! Rationals are strings in canonical form, integers are numbers.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub regime: Option<String>,
    pub warnings: Vec<String>,
    /// Extra lines for the text rendering only.
    pub text: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &'static str) -> Self {
        OutputRecord {
            command,
            inputs: Map::new(),
            results: Map::new(),
            regime: None,
            warnings: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "regime": self.regime,
            "warnings": self.warnings,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        if self.text.is_empty() {
            for (k, v) in &self.results {
                out.push_str(&format!("{k}: {}\n", plain(v)));
            }
        } else {
            for line in &self.text {
                out.push_str(line);
                out.push('\n');
            }
        }
        if let Some(r) = &self.regime {
            out.push_str(&format!("regime: {r}\n"));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }

    /// One row per result; arrays spread over extra columns.
    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        w.write_record(["key", "value"]).expect("in-memory write");
        for (k, v) in &self.results {
            let mut row = vec![k.clone()];
            flatten(v, &mut row);
            w.write_record(&row).expect("in-memory write");
        }
        if let Some(r) = &self.regime {
            w.write_record(["regime", r]).expect("in-memory write");
        }
        for warning in &self.warnings {
            w.write_record(["warning", warning])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn flatten(v: &Value, row: &mut Vec<String>) {
    match v {
        Value::Array(xs) => xs.iter().for_each(|x| flatten(x, row)),
        Value::Object(m) => m.iter().for_each(|(k, x)| {
            row.push(k.clone());
            flatten(x, row);
        }),
        other => row.push(plain(other)),
    }
}
