//! The `dha` binary end to end: output, exit codes and written files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn dha(args: &[&str]) -> Output {
    dha_env(args, &[])
}

fn dha_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dha"));
    cmd.args(args).env_remove("DHA_STEP_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("dha runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_cyclic_family_both_methods() {
    for n in [3, 4] {
        let f = fixture(&format!("example_1_1_n{n}.json"));
        let o = dha(&["check", "--input", path(&f), "--method", "both"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains("PBW: true/true, verdicts agree"), "{}", stdout(&o));
    }
}

#[test]
fn check_failing_input_exits_one_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let f = fixture("non_invariant_kappa.json");
    let o = dha(&["check", "--input", path(&f), "--out", path(&report)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("PBW: false/false"), "{out}");
    assert!(out.contains("condition 2 fails at g = (2 3)"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["agree"], serde_json::Value::Bool(true));
    assert_eq!(json["conditions"]["conditions"]["2"], serde_json::Value::Bool(false));
}

#[test]
fn char2_is_refused_by_conditions_and_accepted_by_confluence() {
    let f = fixture("example_4_3.json");
    let o = dha(&["check", "--input", path(&f), "--method", "conditions"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--method confluence"), "{}", stderr(&o));
    let o = dha(&["check", "--input", path(&f), "--method", "confluence"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("PBW: true"));
}

#[test]
fn build_then_extract_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let built = dir.path().join("h.json");
    let mu = dir.path().join("mu.json");
    let o = dha(&["build", "--mu", path(&fixture("example_1_1_mu.json")), "--out", path(&built)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        std::fs::read_to_string(&built).unwrap(),
        std::fs::read_to_string(fixture("example_1_1_n3.json")).unwrap()
    );
    let o = dha(&["extract", "--input", path(&built), "--out", path(&mu)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        std::fs::read_to_string(&mu).unwrap(),
        std::fs::read_to_string(fixture("example_1_1_mu.json")).unwrap()
    );
}

#[test]
fn extract_refuses_non_pbw_input() {
    let o = dha(&["extract", "--input", path(&fixture("non_invariant_kappa.json"))]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn normal_form_prints_the_reduced_word() {
    let o = dha(&["normal-form", "--input", path(&fixture("golden_rule.json")), "--word", "g[2,1,3] v1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "v2·g[2,1,3] + g[2,1,3]");

    let o = dha(&["normal-form", "--input", path(&fixture("example_1_1_n3.json")), "--word", "v2 v1"]);
    assert_eq!(stdout(&o).trim(), "v1·v2 + 4·g[2,3,1] + g[3,1,2]");
}

#[test]
fn convert_writes_parameters_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("converted.json");
    let o = dha(&["convert", "--input", path(&fixture("golden_rule.json")), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let cert = dir.path().join("converted.certificate.json");
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(cert).unwrap()).unwrap();
    assert_eq!(cert["passed"], serde_json::Value::Bool(true));
    assert_eq!(cert["degree"], serde_json::json!(3));
    let o = dha(&["check", "--input", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn convert_refuses_modular_input() {
    let dir = tempfile::tempdir().unwrap();
    let mu = dir.path().join("mu.json");
    let built = dir.path().join("h.json");
    std::fs::write(&mu, r#"{"characteristic": 3, "n": 3, "a": {}, "b": ["1", "1"], "c": "0"}"#).unwrap();
    assert_eq!(dha(&["build", "--mu", path(&mu), "--out", path(&built)]).status.code(), Some(0));
    let o = dha(&["convert", "--input", path(&built)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not invertible"), "{}", stderr(&o));
}

#[test]
fn crossval_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let o = dha(&["crossval", "--n", "3", "--char", "5", "--samples", "30", "--seed", "11", "--out", path(p)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).starts_with("30/30 agreement"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn step_budget_comes_from_the_environment() {
    let f = fixture("example_1_1_n3.json");
    let o = dha_env(&["check", "--input", path(&f), "--method", "confluence"], &[("DHA_STEP_BUDGET", "3")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).to_lowercase().contains("budget"), "{}", stderr(&o));
    let o = dha_env(&["check", "--input", path(&f), "--method", "confluence"], &[("DHA_STEP_BUDGET", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"characteristic": 4, "n": 2}"#).unwrap();
    assert_eq!(dha(&["check", "--input", path(&bad)]).status.code(), Some(2));
    assert_eq!(dha(&["check", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(dha(&["frobnicate"]).status.code(), Some(2));
}
