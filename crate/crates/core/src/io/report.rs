use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::lab::{AxiomVerdict, LabReport, SearchMode, Witness};
use crate::measures::MeasureValue;
use crate::t1::Containment;

use super::SoftSetDocument;

pub const TOOL_NAME: &str = "softset";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Envelope of every `--json` output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: Vec<InputDigest>, result: Value) -> Self {
        Self {
            tool: TOOL_NAME,
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn scalar_json(value: &MeasureValue) -> Value {
    json!({
        "exact": value.exact_string(),
        "decimal": value.decimal(),
        "value": value.to_f64(),
    })
}

fn containment_code(c: Containment) -> &'static str {
    match c {
        Containment::Subset => "subset",
        Containment::Equality => "equality",
    }
}

fn witness_json(w: &Witness) -> Value {
    Value::Array(
        w.instances
            .iter()
            .map(|i| SoftSetDocument::from(i).to_json_value())
            .collect(),
    )
}

fn verdict_json(v: &AxiomVerdict) -> Value {
    json!({
        "axiom": v.axiom.code(),
        "status": v.status.code(),
        "cases": v.cases,
        "witness": v.witness.as_ref().map(witness_json),
        "minimal": v.minimal.as_ref().map(witness_json),
    })
}

/// `fallback` records why the requested mode was replaced.
pub fn lab_report_json(report: &LabReport, fallback: Option<&str>) -> Value {
    let b = &report.bounds;
    let mode = match b.mode {
        SearchMode::Exhaustive => json!({"kind": "exhaustive"}),
        SearchMode::Random { trials, seed } => json!({"kind": "random", "trials": trials, "seed": seed}),
    };
    json!({
        "target": report.target.to_string(),
        "mode": mode,
        "fallback": fallback,
        "bounds": {
            "max_universe": b.max_universe,
            "max_primary": b.max_primary,
            "max_underlying": b.max_underlying,
            "containment": containment_code(b.containment),
        },
        "groups": report
            .groups
            .iter()
            .map(|(label, n)| json!({"label": label, "instances": n}))
            .collect::<Vec<_>>(),
        "level": report.level.map(|l| l.code()),
        "violation_found": report.violation_found(),
        "verdicts": report.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
    })
}
