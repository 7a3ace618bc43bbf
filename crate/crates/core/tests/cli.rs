//! End-to-end runs of the `locoh` binary: exit codes, output files, formats
//! and the pinned golden reports.
//!
//! Regenerate the golden files with `UPDATE_GOLDEN=1 cargo test --test cli`.

use std::path::PathBuf;
use std::process::{Command, Output};

fn locoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let out = locoh(args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let got = stdout(&out);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name} drifted; rerun with UPDATE_GOLDEN=1 if the change is intended");
}

#[test]
fn golden_cohomology_d2_5() {
    golden("cohomology_d2_5.json", &["cohomology", "--d-min", "2", "--d-max", "5", "--field", "q"]);
}

#[test]
fn golden_frobenius_n8() {
    golden("frobenius_n8.json", &["frobenius", "--n-set", "8", "--field", "q"]);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["factors", "--set", "{1,7,25}", "--field", "fp:3"][..],
        &["factors", "--set", "1..12", "--field", "fp:5", "--seed", "42"],
        &["verify-lemma1", "--max-i", "10", "--field", "fp:7"],
        &["frobenius", "--n-set", "{9,27}", "--field", "fp:3", "--seed", "1"],
    ] {
        let (a, b) = (locoh(args), locoh(args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn report_is_self_describing() {
    let out = stdout(&locoh(&["verify-lemma1", "--max-i", "1", "--field", "fp:2", "--seed", "3"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tool"], "locoh");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["field"], "fp:2");
    assert_eq!(v["seed"], 3);
    assert_eq!(v["determinants"][0]["det"], "t+s");
    assert_eq!(v["all_pass"], true);
}

#[test]
fn verify_lemma1_thirty_passes() {
    let out = locoh(&["verify-lemma1", "--max-i", "30", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("det B_") && l.contains("τ_")).count(), 30);
    assert!(!text.contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify-lemma1", "--max-i", "0"][..],
        &["verify-lemma1", "--max-i", "201"],
        &["frobenius", "--n-set", "{5}"],
        &["cohomology", "--d-min", "4", "--d-max", "3"],
        &["factors", "--set", "1..3", "--field", "fp:9"],
        &["factors", "--set", "1..3", "--format", "xml"],
        &["bogus"],
    ] {
        assert_eq!(locoh(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn warning_path_still_runs() {
    let out = locoh(&["factors", "--set", "{4}", "--field", "fp:2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert_eq!(stdout(&out), "i,new_factors,cumulative\n4,1,1\n");
}

#[test]
fn csv_columns() {
    let out = stdout(&locoh(&["factors", "--set", "{1,7,25}", "--field", "fp:3", "--format", "csv"]));
    assert_eq!(out, "i,new_factors,cumulative\n1,1,1\n7,3,4\n25,8,12\n");
    let out = stdout(&locoh(&["frobenius", "--n-set", "6,8,10", "--format", "csv"]));
    assert_eq!(out, "n,new_witnesses,cumulative\n6,1,1\n8,1,2\n10,2,4\n");
}

#[test]
fn factors_over_q_reach_twenty() {
    let out = stdout(&locoh(&["factors", "--set", "1..20"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][19]["cumulative"], 20);
    assert_eq!(v["pairwise_coprime"], true);
}

#[test]
fn cohomology_records() {
    let out = stdout(&locoh(&["cohomology", "--d-min", "2", "--d-max", "10"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r["pass"] == true && r["torsion"]["nonmembership_index"] == 1));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = locoh(&["frobenius", "--n-set", "8", "--format", "text", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("B_6") && text.contains("τ_6") && text.ends_with("all checks: PASS\n"));
}
