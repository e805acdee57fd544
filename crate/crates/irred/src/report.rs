//! Bit-stable JSON and CSV emission.
//!
//! Keys are sorted (the default `serde_json` map is ordered), integers stay
//! integers, and every rational appears as an exact `p/q` string. No value
//! anywhere is a float.

use serde_json::{json, Map, Value};

use crate::decompose::{Decomposition, PrimeSupport};
use crate::harness::{SuiteOutcome, VerificationReport};
use crate::powers::{ScanKind, ScanReport};
use crate::ratpoly::RationalPolynomial;
use crate::vars::VariableSet;

/// Renders a JSON document with a trailing newline.
pub fn json_to_string(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

pub fn prime_json(prime: &PrimeSupport, vars: &VariableSet) -> Value {
    Value::Array(
        prime
            .vars()
            .iter()
            .map(|&i| Value::String(vars.name(i).to_string()))
            .collect(),
    )
}

pub fn polynomial_json(poly: &RationalPolynomial) -> Value {
    json!({
        "coeffs": poly.coefficient_strings(),
        "degree": poly.degree().map_or(-1, |d| d as i64),
    })
}

pub fn decomposition_json(decomposition: &Decomposition) -> Value {
    let vars = decomposition.target().vars();
    let components: Vec<Value> = decomposition
        .components()
        .iter()
        .map(|c| {
            json!({
                "prime": prime_json(c.prime(), vars),
                "ideal": c.ideal().to_string(),
            })
        })
        .collect();
    json!({
        "target": decomposition.target().to_string(),
        "components": components,
    })
}

fn not_stabilized() -> Value {
    Value::String("not stabilized".into())
}

pub fn scan_report_json(report: &ScanReport) -> Value {
    let mut map = Map::new();
    map.insert(
        "kind".into(),
        Value::String(
            match report.kind {
                ScanKind::Powers => "powers",
                ScanKind::SymbolicPowers => "symbolic-powers",
            }
            .into(),
        ),
    );
    map.insert("vars".into(), json!(report.ideal.vars().names()));
    map.insert("ideal".into(), Value::String(report.ideal.to_string()));
    map.insert("n_range".into(), json!([report.n_range.0, report.n_range.1]));
    map.insert("ir_values".into(), json!(report.ir_values));
    map.insert("mu_values".into(), json!(report.mu_values));
    map.insert(
        "ass_stable_at".into(),
        report.ass_stable_at.map_or_else(not_stabilized, |n| json!(n)),
    );
    map.insert(
        "fitted_ir".into(),
        report
            .fitted_ir
            .as_ref()
            .map_or_else(not_stabilized, polynomial_json),
    );
    map.insert(
        "fitted_mu".into(),
        report
            .fitted_mu
            .as_ref()
            .map_or_else(not_stabilized, polynomial_json),
    );
    map.insert("bight".into(), json!(report.bight));
    map.insert(
        "analytic_spread".into(),
        match (report.kind, report.analytic_spread) {
            (ScanKind::SymbolicPowers, _) => Value::Null,
            (ScanKind::Powers, Some(ell)) => json!(ell),
            (ScanKind::Powers, None) => not_stabilized(),
        },
    );
    map.insert(
        "bounds_ok".into(),
        report.bounds_ok.map_or(Value::Null, Value::Bool),
    );
    Value::Object(map)
}

/// CSV with the columns `n, ir, mu`.
pub fn scan_report_csv(report: &ScanReport) -> String {
    let mut out = String::from("n,ir,mu\n");
    for (i, (ir, mu)) in report.ir_values.iter().zip(&report.mu_values).enumerate() {
        out.push_str(&format!("{},{},{}\n", report.n_range.0 + i as u32, ir, mu));
    }
    out
}

pub fn verification_report_json(report: &VerificationReport) -> Value {
    json!({
        "statement": report.statement.id(),
        "instance": report.instance,
        "result": report.result.as_str(),
        "witness": report.witness.clone().unwrap_or(Value::Null),
    })
}

pub fn suite_json(outcome: &SuiteOutcome, seed: u64) -> Value {
    json!({
        "seed": seed,
        "summary": {
            "pass": outcome.passed,
            "fail": outcome.failed,
            "skip": outcome.skipped,
        },
        "reports": outcome
            .reports
            .iter()
            .map(verification_report_json)
            .collect::<Vec<_>>(),
    })
}
