//! Output envelope and rendering. JSON output is the stable contract:
//! every payload is wrapped with the version, the command, the seed and
//! tolerance in effect, and an echo of the parsed configuration.

use serde::Serialize;
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub tol: f64,
    pub config: Value,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, seed: u64, tol: f64, config: Value, result: T) -> Self {
        Envelope {
            version: VERSION,
            command,
            seed,
            tol,
            config,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable payload")
    }
}

/// Structured error payload (printed to stdout in JSON mode so scripted
/// callers always receive one JSON document).
pub fn error_json(command: &'static str, seed: u64, tol: f64, kind: &str, message: &str) -> String {
    serde_json::to_string_pretty(&json!({
        "version": VERSION,
        "command": command,
        "seed": seed,
        "tol": tol,
        "error": { "kind": kind, "message": message },
    }))
    .expect("serializable error")
}

/// One pass/fail line per report, for the text renderings.
pub fn status_line(pass: bool, label: &str, detail: &str) -> String {
    format!("{} {label}  {detail}", if pass { "PASS" } else { "FAIL" })
}
