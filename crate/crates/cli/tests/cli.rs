use std::process::{Command, Output};

use serde_json::Value;

fn glkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glkm")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn braid_alpha_one_passes() {
    let o = glkm(&["verify", "braid", "--k", "1", "--m", "1", "--alpha", "1"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stdout).contains("overall: PASS"));
}

#[test]
fn braid_alpha_two_fails_with_witness() {
    let o = glkm(&["verify", "braid", "--k", "1", "--m", "1", "--alpha", "2", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let w = &v["checks"][0]["witnesses"][0];
    assert!(w["context"].as_str().unwrap().contains("involutive"));
    assert_eq!(w["expected"], "1");
    assert_eq!(w["actual"], "9");
}

#[test]
fn classify_outside_solutions_is_a_failed_precondition() {
    let o = glkm(&["classify", "--n", "3", "--k", "1", "--alpha", "2", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["config"]["alpha"], "2");
    assert!(v["checks"][0]["witness_count"].as_u64().unwrap() > 0);
}

#[test]
fn classify_labels() {
    let cases: [(&[&str], &str); 3] = [
        (&["--n", "3", "--k", "3", "--alpha", "1"], "combinatorial"),
        (&["--n", "3", "--k", "1", "--alpha", "1"], "non-combinatorial"),
        (&["--n", "3", "--lyubashenko"], "combinatorial"),
    ];
    for (args, want) in cases {
        let mut full = vec!["classify", "--format", "json"];
        full.extend_from_slice(args);
        let o = glkm(&full);
        assert_eq!(code(&o), 0);
        assert_eq!(json(&o)["data"]["classification"], want, "{args:?}");
    }
}

#[test]
fn ssyt_json_has_two_tableaux() {
    let o = glkm(&["gl11", "ssyt", "--sites", "3", "--p", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let t = v["data"]["tableaux"].as_array().unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(v["data"]["shape"], serde_json::json!([2, 1]));
    assert_eq!(t[0]["rows"], serde_json::json!([[1, 1], [2]]));
    assert_eq!(t[1]["rows"], serde_json::json!([[1, 2], [2]]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "braid", "--n", "3", "--k", "1", "--m", "1"][..],
        &["verify", "braid", "--n", "3"],
        &["verify", "nonsense"],
        &["verify", "ybe", "--lambda", "1/2"],
        &["verify", "ybe", "--lambda", "1/2,3,4"],
        &["verify", "ybe", "--lambda", "x"],
        &["verify", "action", "--n", "2", "--k", "0"],
        &["verify", "relations", "--n", "3", "--k", "1", "--sites", "9"],
        &["spectrum2", "--n", "5", "--k", "2", "--dot"],
    ] {
        let o = glkm(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn json_round_trips() {
    let o = glkm(&["verify", "relations", "--n", "3", "--k", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), v);
    for key in ["version", "config", "checks", "passed", "duration_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn no_timings_is_deterministic() {
    let args = ["verify", "casimir", "--n", "2", "--k", "1", "--sites", "2", "--format", "json", "--no-timings"];
    let a = glkm(&args);
    let b = glkm(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["duration_ms"], 0.0);
}

#[test]
fn output_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = glkm(&["gl11", "xx", "--sites", "3", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["sites"], "3");
}

#[test]
fn spectrum_dot_matches_golden() {
    let o = glkm(&["spectrum2", "--n", "2", "--k", "1", "--dot", "--sign", "plus"]);
    assert_eq!(code(&o), 0);
    let golden = include_str!("../../core/tests/golden/graph_n2_k1_plus.dot");
    assert_eq!(String::from_utf8(o.stdout).unwrap(), golden);
}

#[test]
fn spectrum_vectors_in_json() {
    let o = glkm(&["spectrum2", "--n", "3", "--k", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let plus = v["data"]["plus"].as_array().unwrap();
    let minus = v["data"]["minus"].as_array().unwrap();
    assert_eq!(plus.len() + minus.len(), 9);
    assert_eq!(plus.len(), 5);
}

#[test]
fn swapped_convention_flips_the_displayed_minus_vectors() {
    let std = glkm(&["spectrum2", "--n", "2", "--k", "1"]);
    let swp = glkm(&["spectrum2", "--n", "2", "--k", "1", "--convention", "swapped"]);
    assert_eq!(code(&std), 0);
    assert_eq!(code(&swp), 1);
}

#[test]
fn basis_and_action() {
    let o = glkm(&["basis", "enumerate", "--n", "3", "--k", "1", "--sites", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert!(!v["data"]["plus"].as_array().unwrap().is_empty());
    let o = glkm(&["verify", "action", "--n", "3", "--k", "2", "--sites", "3"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn series_commands_pass() {
    for args in [
        &["verify", "casimir", "--n", "3", "--k", "1", "--sites", "2"][..],
        &["verify", "antipode", "--n", "3", "--k", "2", "--sites", "2", "--order", "3"],
        &["verify", "unitarity", "--n", "3", "--k", "1", "--lambda", "1/3,2+i", "--lambda", "-7/2"],
        &["verify", "ybe", "--n", "3", "--k", "1", "--lambda", "1/3,2", "--lambda", "-5/4", "--lambda", "3+i"],
        &["verify", "relations", "--suite", "centralizer", "--convention", "swapped"],
        &["gl11", "modules", "--sites", "4"],
        &["gl11", "tensor", "--n1", "2", "--p1", "1", "--n2", "2", "--p2", "0"],
    ] {
        let o = glkm(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn centralizer_negative_control_fails() {
    let o = glkm(&["verify", "relations", "--suite", "centralizer", "--alpha", "0", "--n", "3", "--k", "1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn report_all_passes() {
    let o = glkm(&["report-all", "--format", "json", "--no-timings"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
}

#[test]
fn report_all_text_without_timings_is_deterministic() {
    let a = glkm(&["report-all", "--no-timings"]);
    let b = glkm(&["report-all", "--no-timings"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
