use std::collections::BTreeSet;
use std::process::ExitCode;

use serde_json::{Map, Value};

/// How a subcommand's answer maps onto the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    True,
    False,
    Inconclusive,
}

impl Status {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Status::True
        } else {
            Status::False
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::True => ExitCode::SUCCESS,
            Status::False => ExitCode::from(1),
            Status::Inconclusive => ExitCode::from(2),
        }
    }
}

/// Flat, ordered key-value report. Printed as `key: value` lines, or as a
/// single JSON object with `--json`.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }
}

pub fn set_string(xs: &BTreeSet<usize>) -> String {
    let items: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}
