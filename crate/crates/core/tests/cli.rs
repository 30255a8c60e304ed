use std::process::{Command, Output};

use serde_json::Value;

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata-atlas"))
        .args(args)
        .env_remove("STRATA_ATLAS_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn paramodular_summary() {
    let o = atlas(&["gsp", "--g", "2", "--level", "1", "summary"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "5 EKOR strata, 2 KR strata, 3 Newton classes, components: 1\n"
    );
}

#[test]
fn klingen_summary_json() {
    let o = atlas(&["gsp", "--g", "2", "--level", "0,1", "summary", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["ekor_strata"], 8);
    assert_eq!(v["kr_strata"], 4);
    assert_eq!(v["components"], 2);
}

#[test]
fn admissible_set_json() {
    let o = atlas(&["gsp", "--g", "2", "adm", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["artifact"], "adm");
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 13);
    assert!(elements.iter().any(|e| e["word"] == "tau" && e["length"] == 0));
}

#[test]
fn hasse_dot_output() {
    let o = atlas(&["gsp", "--g", "2", "--level", "0", "hasse-ekor", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("rankdir=BT"));
    assert_eq!(dot.matches("->").count(), 3);
}

#[test]
fn dot_is_rejected_outside_hasse_diagrams() {
    let o = atlas(&["gsp", "--g", "2", "adm", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(atlas(&["gsp", "--g", "2", "--level", "7", "summary"]).status.code(), Some(2));
    assert_eq!(atlas(&["gsp", "--g", "2", "nonsense"]).status.code(), Some(2));
    assert_eq!(atlas(&["gsp", "--g", "0", "summary"]).status.code(), Some(2));
}

#[test]
fn exceeded_cap_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_strata-atlas"))
        .args(["gsp", "--g", "2", "selfcheck"])
        .env("STRATA_ATLAS_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ball"));
}

#[test]
fn malformed_cap_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_strata-atlas"))
        .args(["gsp", "--g", "2", "summary"])
        .env("STRATA_ATLAS_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selfcheck_passes_and_is_deterministic() {
    let a = atlas(&["gsp", "--g", "2", "selfcheck"]);
    let b = atlas(&["gsp", "--g", "2", "selfcheck"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("0 mismatches\n"));
}

#[test]
fn schema_is_valid_json() {
    let o = atlas(&["schema"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["$schema"], "https://json-schema.org/draft/2020-12/schema");
}
