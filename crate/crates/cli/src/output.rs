//! Command results and how they are printed.

use std::fmt::Write;

use serde_json::Value;

use reslat_core::{AxiomReport, Elem, KalmanAlgebra};

/// The result of one command: human-readable text, the full JSON report,
/// and the witnesses of any failed checks.
pub struct Outcome {
    pub pass: bool,
    pub text: String,
    pub json: Value,
    pub failures: Vec<Value>,
}

impl Outcome {
    pub fn new(text: String, json: Value, failures: Vec<Value>) -> Self {
        Outcome {
            pass: failures.is_empty(),
            text,
            json,
            failures,
        }
    }

    /// Print to standard output. Failure witnesses are always printed as
    /// JSON; in `--json` mode they are part of the report.
    pub fn emit(&self, json: bool) {
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("reports serialize")
            );
            return;
        }
        print!("{}", self.text);
        if !self.pass {
            for f in &self.failures {
                println!("{f}");
            }
        }
    }
}

/// Accumulates text lines.
#[derive(Default)]
pub struct Text(String);

impl Text {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.0.push_str(s.as_ref());
        self.0.push('\n');
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

/// `"ok"` or the violated names with witnesses.
pub fn describe(report: &AxiomReport) -> String {
    if report.is_pass() {
        return "ok".into();
    }
    let mut s = String::new();
    for (i, v) in report.violations.iter().enumerate() {
        if i > 0 {
            s.push_str("; ");
        }
        write!(s, "{} fails at {:?}", v.axiom, v.witness).unwrap();
    }
    s
}

/// A report as JSON, with element positions of `K(L)` also shown as base
/// pairs when `k` is given.
pub fn report_json(report: &AxiomReport, k: Option<&KalmanAlgebra>) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                let mut obj = serde_json::json!({ "axiom": v.axiom, "witness": v.witness });
                if let Some(k) = k {
                    if v.witness.iter().all(|&p| p < k.size()) {
                        obj["witness_pairs"] = serde_json::json!(pairs_of(k, &v.witness));
                    }
                }
                obj
            })
            .collect(),
    )
}

pub fn pairs_of(k: &KalmanAlgebra, positions: &[Elem]) -> Vec<(Elem, Elem)> {
    positions.iter().map(|&p| k.pair(p)).collect()
}

pub fn pair_label(k: &KalmanAlgebra, p: Elem) -> String {
    let (x, y) = k.pair(p);
    format!("({x},{y})")
}

/// One failure record.
pub fn failure(
    algebra: &str,
    check: &str,
    report: &AxiomReport,
    k: Option<&KalmanAlgebra>,
) -> Value {
    serde_json::json!({
        "algebra": algebra,
        "check": check,
        "violations": report_json(report, k),
    })
}
