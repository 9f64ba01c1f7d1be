use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

/// Everything but `timing` is a pure function of the invocation.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub subcommand: String,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub result: Value,
    pub validators: BTreeMap<String, bool>,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub seconds: f64,
}

impl RunReport {
    pub fn valid(&self) -> bool {
        self.validators.values().all(|&ok| ok)
    }

    pub fn render(&self, format: Format) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        match format {
            Format::Json => serde_json::to_string_pretty(&value).expect("reports serialize") + "\n",
            Format::Tsv => {
                let mut out = String::new();
                flatten("", &value, &mut out);
                out
            }
        }
    }
}

/// One `key<TAB>value` line per leaf; arrays of scalars stay on one line.
fn flatten(prefix: &str, value: &Value, out: &mut String) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{prefix}\t{}", cells.join(","));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        other => {
            let _ = writeln!(out, "{prefix}\t{}", scalar(other));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
