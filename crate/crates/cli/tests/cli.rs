//! End-to-end tests of the `hesse` binary: exit codes, report schema and
//! byte stability.

use std::process::{Command, Output};

fn hesse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hesse"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn decompose_passes_and_emits_json_schema() {
    let out = hesse(&["decompose"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["version", "seed", "field", "checks", "summary"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    let check = &v["checks"][0];
    for key in ["id", "status", "expected", "actual", "detail"] {
        assert!(check.get(key).is_some(), "missing check key {key}");
    }
    for key in ["pass", "fail", "assumed", "flagged"] {
        assert!(v["summary"].get(key).is_some(), "missing summary key {key}");
    }
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["flagged"], 1);
}

#[test]
fn failing_check_exits_one() {
    let out = hesse(&["membership", "--pencil", "x^3;y^3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hesse(&["rank", "--field", "zz"]).status.code(), Some(2));
    assert_eq!(
        hesse(&["membership", "--pencil", "garbage("]).status.code(),
        Some(2)
    );
    assert_eq!(hesse(&["nosuch"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable_for_fixed_seed() {
    let a = hesse(&["membership", "--seed", "5"]);
    let b = hesse(&["membership", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn markdown_mirrors_the_checks() {
    let out = hesse(&["decompose", "--format", "md"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| decompose/constituents | pass |"));
    assert!(text.contains("flagged"));
}
