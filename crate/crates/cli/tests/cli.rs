//! End-to-end tests of the batch front end.

use std::fs;
use std::process::Command;

fn bsk() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bsk"))
}

fn report_of(out: &std::process::Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn hc_fixture() {
    let out = bsk()
        .args(["hc", "--rank", "1", "--c", "1/1", "--first", "[[0]]", "--second", "[[2]]"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report = report_of(&out);
    assert_eq!(report["results"][0]["value"], "1/2");
    assert_eq!(report["results"][1]["pass"], true);
}

#[test]
fn izergin_fixture() {
    let out = bsk().args(["izergin", "--c", "1", "--v", "[4,5]", "--u", "[0,2]"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(report_of(&out)["results"][0]["value"], "1/4");
}

#[test]
fn scalar_mismatched_cardinalities_vanish_with_success() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("model.json");
    fs::write(
        &model,
        r#"{"rank": 1, "c": "1", "alphas": [{"kind": "table", "values": [["1", "5"]]}]}"#,
    )
    .unwrap();
    let out = bsk()
        .args(["scalar", "--model", model.to_str().unwrap(), "--v", "[[1]]", "--u", "[[]]"])
        .output()
        .unwrap();
    assert!(out.status.success(), "vanishing products are not failures");
    assert_eq!(report_of(&out)["results"][0]["value"], "0");
}

#[test]
fn scalar_fixture_value() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("model.json");
    fs::write(
        &model,
        r#"{"rank": 1, "c": "1", "alphas": [{"kind": "table", "values": [["0","2"],["1","5"]]}]}"#,
    )
    .unwrap();
    let out = bsk()
        .args(["scalar", "--model", model.to_str().unwrap(), "--v", "[[1]]", "--u", "[[0]]"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(report_of(&out)["results"][0]["value"], "-3");
}

#[test]
fn schema_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("model.json");
    fs::write(&model, r#"{"rank": 1, "alphas": []}"#).unwrap();
    let out = bsk()
        .args(["scalar", "--model", model.to_str().unwrap(), "--v", "[[1]]", "--u", "[[0]]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // bad flag values are also schema errors
    let out = bsk()
        .args(["verify", "--suite", "korepin", "--seed", "notanumber"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unknown suite
    let out = bsk().args(["verify", "--suite", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn norm_command_reports_pass() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("norm.json");
    fs::write(
        &input,
        r#"{"rank": 1, "c": "1", "u": [["0"]], "x": [["-8"]], "onshell": true}"#,
    )
    .unwrap();
    let out = bsk().args(["norm", "--input", input.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let report = report_of(&out);
    assert_eq!(report["results"][0]["value"], "-8");
    assert_eq!(report["results"][0]["pass"], true);
}

#[test]
fn verify_single_suite_filters() {
    let out = bsk().args(["verify", "--suite", "kinematics", "--seed", "3"]).output().unwrap();
    assert!(out.status.success());
    let report = report_of(&out);
    let results = report["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        assert!(r["name"].as_str().unwrap().starts_with("kinematics:"));
        assert_eq!(r["pass"], true);
    }
}

#[test]
fn reports_deterministic_up_to_elapsed() {
    let run = || {
        let out = bsk().args(["verify", "--suite", "izergin", "--seed", "11"]).output().unwrap();
        assert!(out.status.success());
        let mut report = report_of(&out);
        report["elapsed_ms"] = serde_json::json!(0);
        serde_json::to_string(&report).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn dimension_cap_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("model.json");
    fs::write(
        &model,
        r#"{"rank": 1, "c": "1", "alphas": [{"kind": "chain", "sites": [{"xi": "0"}, {"xi": "0"}]}]}"#,
    )
    .unwrap();
    let out = bsk()
        .env("BSK_DIM_CAP", "2")
        .args(["scalar", "--model", model.to_str().unwrap(), "--v", "[[1]]", "--u", "[[3]]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "cap must reject the nine-dimensional chain");
    let out = bsk()
        .env("BSK_DIM_CAP", "9")
        .args(["scalar", "--model", model.to_str().unwrap(), "--v", "[[1]]", "--u", "[[3]]"])
        .output()
        .unwrap();
    assert!(out.status.success());
}
