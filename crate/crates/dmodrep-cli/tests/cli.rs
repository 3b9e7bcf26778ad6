//! End-to-end tests of the binary: exit codes, golden outputs, and the
//! documented JSON schemas.

use dmodrep_cli::{AlgebraRecord, TableDoc};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmodrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn critical_shorthand_reports_f4() {
    let out = run(&["critical", "--content", "1,8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1/3"), "{text}");
    assert!(text.contains("F(4)"), "{text}");
    assert!(text.contains("24|16"), "{text}");
}

#[test]
fn critical_never_is_informative_exit_2() {
    let out = run(&["critical", "--content", "4,8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("never"));
}

#[test]
fn critical_full_content_reports_g3() {
    let out = run(&["critical", "--content", "1,7,7,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1/4"), "{text}");
    assert!(text.contains("G(3)"), "{text}");
}

#[test]
fn malformed_content_is_usage_error() {
    let out = run(&["critical", "--content", "nope"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn table_text_matches_golden_and_is_deterministic() {
    let first = run(&["table"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), include_str!("golden/table.txt"));
    let second = run(&["table"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, include_str!("golden/table.json"));
    let doc: TableDoc = serde_json::from_str(&text).expect("parses");
    assert_eq!(doc.schema_version, 1);
    assert_eq!(doc.rows.len(), 9);
    let d7 = &doc.rows[7];
    assert_eq!(d7.lambda_cr.as_deref(), Some("1/3"));
    assert_eq!(d7.algebra.as_deref(), Some("F(4)"));
}

#[test]
fn export_matches_golden() {
    let out = run(&["export", "--content", "3,8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, include_str!("golden/export_3_8.json"));
    let record: AlgebraRecord = serde_json::from_str(&text).expect("parses");
    assert_eq!(record.algebra.as_deref(), Some("D(2,2)"));
    assert_eq!(record.lambda, "-1");
    assert_eq!((record.even_dim, record.odd_dim), (16, 16));
}

#[test]
fn export_alpha_orbit_contains_two() {
    let out = run(&["export", "--content", "0,4", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let record: AlgebraRecord = serde_json::from_str(&stdout(&out)).expect("parses");
    let orbit = record.alpha_orbit.expect("N = 4 family carries an orbit");
    assert!(orbit.values.iter().any(|v| v == "2"), "{:?}", orbit.values);
    assert!(!orbit.degenerate);
}

#[test]
fn export_without_lambda_needs_a_critical_point() {
    let never = run(&["export", "--content", "4,8"]);
    assert_eq!(never.status.code(), Some(2));
    let any = run(&["export", "--content", "0,4"]);
    assert_eq!(any.status.code(), Some(2));
}

#[test]
fn verify_passes_with_nonzero_seed() {
    let out = run(&["verify", "--seed", "7"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.matches("PASS ").count(), 13, "{text}");
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("all 13 checks passed"), "{text}");
}

#[test]
fn verify_reports_corrupted_clifford() {
    let out = run(&["verify", "--corrupt-clifford"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(1), "{text}");
    assert!(text.contains("FAIL clifford-relations"), "{text}");
    assert!(text.contains("first failing check: clifford-relations"), "{text}");
}
