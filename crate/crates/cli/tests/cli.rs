use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitfree")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_splitfree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn construct_y_small_is_five_cycle() {
    let o = run(&["construct", "y", "--n", "5", "--p", "2"]);
    assert!(o.status.success());
    let g6 = stdout(&o).trim().to_string();
    let d = run(&["decode", &g6]);
    let v = &json_lines(&d)[0];
    assert_eq!(v["n"], 5);
    assert_eq!(v["edge_count"], 5);
    let c = run(&["chromatic", &g6]);
    assert_eq!(json_lines(&c)[0]["chi"], 3);
}

#[test]
fn construct_json_reports_structure() {
    let o = run(&["construct", "turan", "--n", "7", "--r", "3", "--format", "json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["edges"], 16);
    assert_eq!(v["parts"].as_array().unwrap().len(), 3);
}

#[test]
fn spectral_of_triangle() {
    let o = run(&["spectral", "Bw", "--perron"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    let rho = v["rho"].as_f64().unwrap();
    let err = v["err"].as_f64().unwrap();
    assert!((rho - 2.0).abs() <= err.max(1e-12));
    assert_eq!(v["perron"].as_array().unwrap().len(), 3);
}

#[test]
fn reads_graph_from_stdin() {
    let o = run_stdin(&["chromatic"], "\nBw\n");
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["chi"], 3);
}

#[test]
fn containment_witness() {
    let split = stdout(&run(&["construct", "split", "--p", "3", "--q", "2"]));
    let v = &json_lines(&run(&["contains", split.trim(), "--p", "3", "--q", "2"]))[0];
    assert_eq!(v["contains"], true);
    let v = &json_lines(&run(&["contains", "Bw", "--clique", "4"]))[0];
    assert_eq!(v["contains"], false);
}

#[test]
fn brouwer_rows_pass() {
    let o = run(&["verify", "brouwer", "--r", "2", "--n", "5..9"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["status"] == "PASS"));
    assert!(rows.iter().all(|r| !r["witnesses"].as_array().unwrap().is_empty()));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["construct", "y", "--n", "3", "--p", "2"]).status.code(), Some(2));
    assert_eq!(run(&["decode", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["decode", "~?A?"]).status.code(), Some(3));
    assert_eq!(run(&["search", "ex", "--n", "12", "--p", "2", "--q", "1"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "thm_1_1", "--r", "2", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn search_is_deterministic_without_timing() {
    let args = ["search", "spex", "--n", "5..7", "--p", "2", "--q", "1", "--no-timing"];
    let a = run(&args);
    let b = run(&["--workers", "1", "search", "spex", "--n", "5..7", "--p", "2", "--q", "1", "--no-timing"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("elapsed_ms"));
}

#[test]
fn search_store_resumes_and_exports_csv() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("records.jsonl");
    let s = store.to_str().unwrap();
    let first = run(&["search", "ex", "--n", "5..6", "--store", s, "--no-timing"]);
    assert!(first.status.success());
    let text = std::fs::read_to_string(&store).unwrap();
    assert_eq!(text.lines().count(), 2);
    let again = Command::new(env!("CARGO_BIN_EXE_splitfree"))
        .args(["search", "ex", "--n", "5..7", "--format", "csv"])
        .env("SPLITFREE_STORE", s)
        .output()
        .unwrap();
    assert!(again.status.success());
    assert_eq!(std::fs::read_to_string(&store).unwrap().lines().count(), 3);
    let csv = stdout(&again);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("n,p,q,objective"));
    assert!(lines[3].starts_with("7,2,1,edges,split-free;non-partite,10,"));
}

#[test]
fn procedure_trace_is_monotone() {
    let y = stdout(&run(&["construct", "y", "--n", "9", "--p", "3"]));
    let o = run(&["procedure", y.trim(), "--split", "3,2"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    let edges: Vec<u64> = v["states"].as_array().unwrap().iter().map(|s| s["edges"].as_u64().unwrap()).collect();
    assert!(edges.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn rotation_check() {
    let o = run(&["rotate", "Ch", "--u", "1", "--v", "2", "--check"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["verdict"]["increased"], true);
    assert_eq!(v["moved"], serde_json::json!([3]));
}

#[test]
fn encode_decode_round_trip() {
    let g6 = stdout(&run(&["encode", "--n", "4", "--edges", "0-1,1-2,2-3"]));
    let v = &json_lines(&run(&["decode", g6.trim()]))[0];
    assert_eq!(v["edges"], serde_json::json!([[0, 1], [1, 2], [2, 3]]));
}
