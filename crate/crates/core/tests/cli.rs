use std::process::{Command, Output};

fn cf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-frobenius")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_exit_codes() {
    let ok = cf(&["verify", "--type", "A", "--rank", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("A2 [1>2], C = full: PASS"));
    for bad in [
        &["verify", "--type", "F", "--rank", "4"][..],
        &["verify", "--type", "D", "--rank", "3"],
        &["verify", "--type", "A", "--rank", "3", "--orientation", "1>2,2>3"],
        &["verify", "--type", "A", "--rank", "2", "--config", "(1,0"],
        &["verify", "--type", "A"],
    ] {
        assert_eq!(cf(bad).status.code(), Some(2), "{:?}", bad);
    }
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d4");
    let o = cf(&["verify", "--type", "D", "--rank", "4", "--out", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(json["status"], "PASS");
    assert_eq!(json["schema"], cluster_frobenius::cli::SCHEMA);
    assert!(out.join("report.txt").exists());
}

#[test]
fn roots_reports_tau_orbits() {
    let o = cf(&["roots", "--type", "A", "--rank", "3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut sizes: Vec<usize> = json["tau_orbits"].as_array().unwrap().iter().map(|o| o.as_array().unwrap().len()).collect();
    sizes.sort();
    assert_eq!(sizes, [3, 6]);
}

#[test]
fn exchange_graph_and_budget() {
    let o = cf(&["exchange-graph", "--type", "A", "--rank", "3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((json["seeds"].as_u64(), json["variables"].as_u64()), (Some(14), Some(9)));
    let o = cf(&["exchange-graph", "--type", "A", "--rank", "3", "--budget", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn mutate_and_seed_outputs_are_deterministic() {
    let a = stdout(&cf(&["mutate", "--type", "E", "--rank", "6", "--word", "1,3,2,6", "--format", "json"]));
    let b = stdout(&cf(&["mutate", "--type", "E", "--rank", "6", "--word", "1,3,2,6", "--format", "json"]));
    assert_eq!(a, b);
    let dot = stdout(&cf(&["universal-seed", "--type", "A", "--rank", "2", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
}

#[test]
fn ar_quiver_dot_boxes_frozen_vertices() {
    let dot = stdout(&cf(&["ar-quiver", "--type", "A", "--rank", "3", "--format", "dot"]));
    assert_eq!(dot.matches("shape=box").count(), 9);
    assert_eq!(dot.matches("->").count(), 30);
}

#[test]
fn higher_powers_of_f_are_structural_only() {
    let o = cf(&["verify", "--type", "A", "--rank", "3", "--f-power", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("N/A") && s.contains("PASS structure"));
}
