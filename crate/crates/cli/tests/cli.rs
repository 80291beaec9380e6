use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixedloop")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn patterns_in_canonical_order() {
    let out = run(&["patterns", "--size", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    let pats: Vec<&str> = v["patterns"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(pats, ["....", "..()", ".().", "(())", "()..", "()()"]);
    let csv = run(&["patterns", "--size", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "index,pattern\n0,..\n1,()\n");
}

#[test]
fn sumrule_points_pass() {
    let out = run(&["sumrule", "--size", "4", "--points", "10", "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["zdet_status"], "PASS");
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&["integrability", "--size", "3", "--samples", "4", "--seed", "9"]);
    let b = run(&["integrability", "--size", "3", "--samples", "4", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["groundstate", "--size", "4", "--a", "1"]);
    assert_eq!(json(&c)["values"], serde_json::json!(["1", "3", "8", "3", "9", "9"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["patterns", "--size", "0"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["qkz", "build", "--size", "2", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["fpl", "enumerate", "--n", "8"]).status.code(), Some(2));
}

#[test]
fn broken_solution_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["qkz", "build", "--size", "2", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let path = dir.path().join("qkz.json");
    let good = path.to_str().unwrap().to_string();
    assert!(run(&["qkz", "verify", "--in", &good]).status.success());

    let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let empty = v["components"][".."].clone();
    v["components"]["()"] = empty;
    let bad = dir.path().join("bad.json");
    fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["qkz", "verify", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "FAIL");
}

#[test]
fn fpl_enumerate_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fpls.jsonl");
    let out = run(&["fpl", "enumerate", "--n", "9", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 6);
    let out = run(&["fpl", "classify", "--in", file.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "pattern,count,a_polynomial\n...,1,a\n.(),2,2\n().,3,a + 2\n"
    );
}

#[test]
fn reproduce_paper_small() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["reproduce-paper", "--max-size", "4", "--fpl-max", "11", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(v["all_pass"], true);
    let crit = v["criteria"].as_array().unwrap();
    assert_eq!(crit.len(), 12);
    assert!(crit.iter().all(|c| c["status"] == "PASS"));
}
