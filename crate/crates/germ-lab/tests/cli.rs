//! End-to-end tests of the `germ-lab` binary: exit codes, JSON output
//! shape, and DOT golden files.

use std::process::{Command, Output};

fn germ_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germ-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = germ_lab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn resolve_json_matches_spec_shape() {
    let text = stdout(&["resolve", "--k1", "5", "--k2", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["weights"], serde_json::json!([3, 2, 1, 3]));
    assert_eq!(doc["sbar"], serde_json::json!([5, 3, 3, 1]));
    assert_eq!(doc["blowups"], serde_json::json!(4));
}

#[test]
fn classify_reports_the_named_examples() {
    let text = stdout(&["classify", "--k1", "5", "--k2", "3"]);
    assert!(text.contains("NONE"), "{text}");
    let text = stdout(&["classify", "--k1", "3", "--k2", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["family"], "N");
    assert_eq!(doc["degree"], 3);
    assert_eq!(doc["class_count"], 1);
    let text = stdout(&["classify", "--k1", "6", "--k2", "5", "--witness", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["family"], "O");
    assert_eq!(doc["degree"], 5);
    assert_eq!(doc["subcase"], "(2,1)_{2_0}");
    assert!(doc["witness"]["a"].as_str().unwrap().contains('('));
}

#[test]
fn dio_commands_emit_residual_checks() {
    let text = stdout(&[
        "dio", "extend", "--k1", "5", "--k2", "3", "--q1", "3", "--q2", "1",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["q3"], 1);
    assert_eq!(doc["q4"], 13);
    assert_eq!(doc["m1"], 2);
    assert_eq!(doc["m2"], 4);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 4);
    assert!(checks.iter().all(|c| c["ok"] == true));

    let text = stdout(&["dio", "pr1-inverse", "--k", "6", "--q", "1", "--format", "table"]);
    assert_eq!(text.trim(), "{6/1,5/4}");
}

#[test]
fn golden_dot_outputs_are_stable() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["tree", "--level", "4", "--format", "dot"],
            include_str!("golden/tree_level4.dot"),
        ),
        (
            &["resolve", "--k1", "5", "--k2", "3", "--format", "dot"],
            include_str!("golden/resolve_5_3.dot"),
        ),
        (
            &["hj", "--k", "12", "--q", "5", "--format", "dot"],
            include_str!("golden/hj_12_5.dot"),
        ),
    ];
    for (args, golden) in cases {
        let first = stdout(args);
        let second = stdout(args);
        assert_eq!(first, second, "{args:?} not deterministic");
        assert_eq!(&first, golden, "{args:?} drifted from the golden file");
    }
}

#[test]
fn verify_all_lists_every_suite_and_exits_zero() {
    let text = stdout(&["verify", "--suite", "all", "--bound", "100", "--format", "json"]);
    let docs: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reports = docs.as_array().unwrap();
    assert!(reports.len() >= 8, "expected at least 8 suites, got {}", reports.len());
    assert!(reports.iter().all(|r| r["failure_count"] == 0));
}

#[test]
fn monodromy_suite_alias_works() {
    let text = stdout(&["verify", "--suite", "monodromy", "--bound", "8", "--format", "json"]);
    let docs: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(docs[0]["suite"], "classification");
    assert_eq!(docs[0]["failure_count"], 0);
}

#[test]
fn single_suite_accepts_a_bound() {
    let text = stdout(&["verify", "--suite", "quotient-delta", "--bound", "40", "--format", "json"]);
    let docs: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(docs[0]["suite"], "quotient-delta");
    assert_eq!(docs[0]["bound"], 40);
}

#[test]
fn usage_and_input_errors_exit_two() {
    // missing required argument: clap usage error
    let out = germ_lab(&["resolve", "--k1", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // non-coprime pair: domain error
    let out = germ_lab(&["resolve", "--k1", "6", "--k2", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime"));
    // unknown suite
    let out = germ_lab(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // stdout stays clean on errors
    assert!(out.stdout.is_empty());
}

#[test]
fn thread_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_germ-lab"))
        .args(["verify", "--suite", "all", "--bound", "6", "--format", "json"])
        .env("GERM_LAB_THREADS", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let docs: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let names: Vec<&str> =
        docs.as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    // canonical order regardless of scheduling
    assert_eq!(names.first(), Some(&"orbit-tree"));
    assert_eq!(names.len(), 8);
}
