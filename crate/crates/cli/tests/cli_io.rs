//! End-to-end CLI behavior: exit codes, output determinism, and schema
//! conformance of every JSON payload (each document must round-trip into
//! the published shape with no unknown fields).

use serde::Deserialize;
use serde_json::Value;
use std::process::{Command, Output};

fn symtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symtc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

// Mirrors of the published JSON schemas; deny_unknown_fields makes the
// round-trip a structural validation.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnvelopeDoc<T> {
    version: String,
    command: String,
    seed: u64,
    tol: f64,
    config: Value,
    result: T,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathDoc {
    path: PathPayload,
    stats: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathPayload {
    space: String,
    rule_id: Option<usize>,
    samples: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteDoc {
    reports: Vec<ReportDoc>,
    sections: Vec<SectionDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct ReportDoc {
    map: String,
    relation: String,
    samples: usize,
    seed: u64,
    tol: f64,
    max_residual: f64,
    worst_input: Vec<Vec<f64>>,
    #[serde(default)]
    min_image_distance: Option<f64>,
    pass: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct SectionDoc {
    planner: String,
    space: String,
    pairs: usize,
    segments: usize,
    seed: u64,
    tol: f64,
    max_endpoint_residual: f64,
    max_step: f64,
    step_bound: f64,
    max_swap_residual: f64,
    max_plane_residual: f64,
    max_continuity_ratio: f64,
    continuity_skipped: usize,
    coverage_failures: usize,
    singular_failures: usize,
    pass: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundsDoc {
    space: String,
    facts: Vec<FactDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactDoc {
    quantity: String,
    kind: String,
    value: Value,
    provenance: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ErrorDoc {
    version: String,
    command: String,
    seed: u64,
    tol: f64,
    error: ErrorBody,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ErrorBody {
    kind: String,
    message: String,
}

#[test]
fn plan_json_round_trips_and_reports_the_documented_rule() {
    let out = symtc(&[
        "plan", "--space", "rp:1", "--map", "complex", "--from", "1,0", "--to", "0,1", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: EnvelopeDoc<PathDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.command, "plan");
    assert_eq!(doc.result.path.space, "rp:1");
    assert_eq!(doc.result.path.rule_id, Some(2));
    assert_eq!(doc.result.path.samples.len(), 65);
    assert!(doc.version.starts_with("0."));
    assert_eq!(doc.seed, 0);
    assert!(doc.tol > 0.0);
    assert!(doc.config.get("space").is_some());
    assert!(doc.result.stats.get("max_step").is_some());
}

#[test]
fn identical_configs_give_byte_identical_output_for_every_command() {
    for args in [
        vec![
            "plan",
            "--space",
            "rp:2",
            "--map",
            "poly:2",
            "--from",
            "1,0,0",
            "--to",
            "0,0.6,0.8",
            "--format",
            "json",
        ],
        vec!["bounds", "--space", "lens:3,4", "--format", "json"],
        vec!["table", "2", "--rho", "1..4", "--format", "json"],
        vec![
            "verify",
            "--target",
            "psi",
            "--r",
            "3",
            "--samples",
            "500",
            "--format",
            "json",
        ],
    ] {
        let first = symtc(&args);
        let second = symtc(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn verify_json_round_trips() {
    let out = symtc(&[
        "verify",
        "--target",
        "poly:3",
        "--samples",
        "500",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: EnvelopeDoc<SuiteDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.result.sections.is_empty());
    assert_eq!(doc.result.reports.len(), 3); // bilinearity + SYM + AXIAL2
    for report in &doc.result.reports {
        assert!(report.pass, "{}/{}", report.map, report.relation);
        assert_eq!(report.samples, 500);
        assert_eq!(report.worst_input.len(), 2);
    }
}

#[test]
fn verify_section_json_round_trips() {
    let out = symtc(&[
        "verify", "--target", "lift", "--space", "lens:1,4", "--pairs", "50", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: EnvelopeDoc<SuiteDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.result.sections.len(), 1);
    assert_eq!(doc.result.sections[0].space, "lens:1,4");
    assert!(doc.result.sections[0].pass);
}

#[test]
fn bounds_json_round_trips_with_provenance_on_every_fact() {
    for space in ["rp:7", "rp:16", "lens:5,8", "lens:3,4", "cp:3", "sphere:2"] {
        let out = symtc(&["bounds", "--space", space, "--format", "json"]);
        assert!(out.status.success(), "{space}");
        let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc.result.space, space);
        assert!(!doc.result.facts.is_empty());
        for fact in &doc.result.facts {
            assert!(!fact.provenance.is_empty());
            assert!(
                ["TC", "TCS", "EMB_DIM", "LEVEL", "B_SNM", "IMM"].contains(&fact.quantity.as_str())
            );
            assert!(["exact", "lower", "upper", "relation"].contains(&fact.kind.as_str()));
        }
    }
}

#[test]
fn bounds_examples_from_the_interface_contract() {
    // cp:3 → exact 7.
    let out = symtc(&["bounds", "--space", "cp:3", "--format", "json"]);
    let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    let tcs = doc
        .result
        .facts
        .iter()
        .find(|f| f.quantity == "TCS" && f.kind == "exact")
        .unwrap();
    assert_eq!(tcs.value, Value::from(7));

    // rp:7 → the tabulated interval [9, 11].
    let out = symtc(&["bounds", "--space", "rp:7", "--format", "json"]);
    let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    let lower = doc
        .result
        .facts
        .iter()
        .find(|f| f.quantity == "TCS" && f.kind == "lower")
        .unwrap();
    let upper = doc
        .result
        .facts
        .iter()
        .find(|f| f.quantity == "TCS" && f.kind == "upper")
        .unwrap();
    assert_eq!(
        (lower.value.clone(), upper.value.clone()),
        (9.into(), 11.into())
    );

    // lens:5,8 → TC exact 22, TCS in [22, 23].
    let out = symtc(&["bounds", "--space", "lens:5,8", "--format", "json"]);
    let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    let tc = doc
        .result
        .facts
        .iter()
        .find(|f| f.quantity == "TC" && f.kind == "exact")
        .unwrap();
    assert_eq!(tc.value, Value::from(22));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: success.
    assert_eq!(
        symtc(&["table", "1", "--format", "json"]).status.code(),
        Some(0)
    );
    // 1: verification failure.
    let out = symtc(&[
        "verify",
        "--target",
        "quaternion",
        "--relation",
        "SYM",
        "--samples",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // 2: usage errors (bad space, unknown target, bad flag).
    assert_eq!(
        symtc(&["bounds", "--space", "torus:2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        symtc(&["verify", "--target", "frobenius"]).status.code(),
        Some(2)
    );
    assert_eq!(symtc(&["plan", "--nope"]).status.code(), Some(2));
    // 3: numerical singularity (diagonal pair).
    let out = symtc(&[
        "plan",
        "--space",
        "rp:1",
        "--map",
        "complex",
        "--from",
        "0.6,0.8",
        "--to",
        "-0.6,-0.8",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc: ErrorDoc = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.error.kind, "singularity");
    assert!(!doc.error.message.is_empty());
    assert_eq!(doc.command, "plan");
    assert!(doc.version.starts_with("0."));
    assert_eq!(doc.seed, 0);
    assert!(doc.tol > 0.0);
}

#[test]
fn plan_csv_has_header_and_one_sample_per_row() {
    let out = symtc(&[
        "plan", "--space", "sphere:1", "--from", "1,0", "--to", "0,1", "--n", "4", "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with('#'));
    assert_eq!(lines[1], "t,c0,c1");
    assert_eq!(lines.len(), 2 + 5); // comment + header + N+1 samples
    let mid: Vec<f64> = lines[4]
        .split(',')
        .map(|t| t.parse::<f64>().unwrap())
        .collect();
    assert_eq!(mid[0], 0.5);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((mid[1] - h).abs() < 1e-12 && (mid[2] - h).abs() < 1e-12);
}

#[test]
fn data_file_concretizes_embedding_relations() {
    let dir = std::env::temp_dir().join("symtc-cli-test-data");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("known.txt");
    std::fs::write(&path, "EMB_DIM rp:16 - 24 exact my-tables\n").unwrap();

    let out = symtc(&[
        "bounds",
        "--space",
        "rp:16",
        "--data",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    let exact = doc
        .result
        .facts
        .iter()
        .find(|f| f.quantity == "TCS" && f.kind == "exact")
        .expect("concretized value");
    assert_eq!(exact.value, Value::from(25));
    assert!(exact.provenance.contains("my-tables"));

    // The same file through the environment variable.
    let out = Command::new(env!("CARGO_BIN_EXE_symtc"))
        .args(["bounds", "--space", "rp:16", "--format", "json"])
        .env("SYMTC_DATA", path.to_str().unwrap())
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: EnvelopeDoc<BoundsDoc> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc
        .result
        .facts
        .iter()
        .any(|f| f.quantity == "TCS" && f.kind == "exact"));
}

#[test]
fn table2_extrapolation_is_flagged() {
    let out = symtc(&["table", "2", "--rho", "5", "--format", "json"]);
    assert!(out.status.success());
    let doc: EnvelopeDoc<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc.result.get("rows").unwrap().as_array().unwrap();
    assert_eq!(rows[0].get("n").unwrap().as_u64(), Some(33));
    let cell = &rows[0].get("tc").unwrap().as_array().unwrap()[1];
    assert_eq!(cell.get("value").unwrap().as_i64(), Some(132));
    assert!(cell.get("matches_reference").unwrap().is_null());
}

#[test]
fn table1_csv_matches_the_tabulated_values() {
    let out = symtc(&["table", "1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with('#')); // config echo
    assert_eq!(lines.next(), Some("r,upper,lower"));
    let rows: Vec<(u32, u32, u32)> = lines
        .map(|l| {
            let v: Vec<u32> = l.split(',').map(|t| t.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.contains(&(7, 11, 9)));
    assert!(rows.contains(&(12, 22, 19)));
}
