//! The `ReportFile` JSON format.

use rotabaxter::report::{CheckReport, Residual};
use rotabaxter::scalar;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::file::FORMAT_VERSION;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: u32,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub pass: bool,
    pub checks: Vec<CheckEntry>,
    pub seed: Option<u64>,
}

/// One leaf check. `residual` is the largest residual for floating-point
/// checks and the witness residual, as rational strings, for exact ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
    pub residual: Option<Value>,
}

impl ReportFile {
    pub fn new(command: &str, inputs: Map<String, Value>, report: &CheckReport) -> Self {
        let mut checks = Vec::new();
        flatten(report, None, &mut checks);
        ReportFile {
            version: FORMAT_VERSION,
            command: command.to_string(),
            inputs,
            pass: report.passed,
            checks,
            seed: report.seed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Leaves of the report tree, named by their path below the root.
fn flatten(report: &CheckReport, prefix: Option<&str>, out: &mut Vec<CheckEntry>) {
    let path = match prefix {
        Some(p) => format!("{p}/{}", report.name),
        None => report.name.clone(),
    };
    if report.items.is_empty() {
        out.push(entry(path, report));
        return;
    }
    let below = if prefix.is_none() { None } else { Some(path.as_str()) };
    for item in &report.items {
        flatten(item, below, out);
    }
}

fn entry(name: String, report: &CheckReport) -> CheckEntry {
    let residual = match (report.max_residual, &report.witness) {
        (Some(x), _) => Some(Value::from(x)),
        (None, Some(w)) => Some(match &w.residual {
            Residual::Exact(values) => Value::from(values.iter().map(scalar::format).collect::<Vec<_>>()),
            Residual::Numeric(x) => Value::from(*x),
        }),
        (None, None) => None,
    };
    CheckEntry { name, pass: report.passed, witness: report.witness.as_ref().map(|w| w.indices.clone()), residual }
}
