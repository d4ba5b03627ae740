//! Report envelope shared by all commands.

use hwmod::{RootSystem, TruncatedWeightSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::JobSpec;

/// Version of the JSON layout; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    schema_version: u32,
    spec: &'a JobSpec,
    /// Height window of every weight set in `result`; `null` for exact,
    /// window-free results.
    depth: Option<u32>,
    result: &'a Value,
}

#[derive(Debug)]
pub struct Report {
    spec: JobSpec,
    depth: Option<u32>,
    result: Value,
    lines: Vec<String>,
}

impl Report {
    pub fn new(spec: JobSpec, depth: Option<u32>, result: Value) -> Self {
        Report { spec, depth, result, lines: Vec::new() }
    }

    pub fn line(&mut self, s: String) {
        self.lines.push(s);
    }

    pub fn result(&self) -> &Value {
        &self.result
    }

    pub fn to_json(&self) -> String {
        let env = Envelope {
            tool: "hwmod",
            version: env!("CARGO_PKG_VERSION"),
            schema_version: SCHEMA_VERSION,
            spec: &self.spec,
            depth: self.depth,
            result: &self.result,
        };
        let mut s = serde_json::to_string_pretty(&env).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let depth = match self.depth {
            Some(d) => format!("depth {d}"),
            None => "exact".to_string(),
        };
        let mut s = format!("hwmod {} | {} {} | {depth}\n", env!("CARGO_PKG_VERSION"), self.spec.command, self.spec.root_system);
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}

/// `[{offset, weight, mult?}]` for a weight set.
pub fn weight_entries(rs: &RootSystem, s: &TruncatedWeightSet) -> Vec<Value> {
    s.entries()
        .map(|(k, m)| {
            json!({"offset": k, "weight": rs.lower(s.lambda(), &k.0), "mult": m})
        })
        .collect()
}
