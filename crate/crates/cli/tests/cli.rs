use std::process::{Command, Output};

use serde_json::Value;

fn quipu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quipu")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = quipu(&all);
    (serde_json::from_str(&stdout(&out)).expect("valid json"), out.status.code().unwrap_or(-1))
}

#[test]
fn rho_of_the_two_spider_is_exactly_two() {
    let out = quipu(&["rho", "spec:open:ks=2,2;ms=2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2 (exact)");
    let (v, _) = json(&["rho", "spec:open:ks=2,2;ms=2"]);
    assert_eq!(v["exact"], "2");
}

#[test]
fn rho_of_star_from_graph6() {
    // K_{1,3}: vertex 0 joined to 1, 2, 3.
    let (v, code) = json(&["rho", "Cs"]);
    assert_eq!(code, 0);
    let approx = v["approx"].as_f64().unwrap();
    assert!((approx - 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn verify_theorem_at_two() {
    let (v, code) = json(&["verify-theorem", "--k", "2"]);
    assert_eq!(code, 0);
    let winners = v[0]["report"]["winners"].as_array().unwrap();
    assert_eq!(winners.len(), 2);
    assert!(winners.iter().all(|w| w["graph6"].as_str().is_some_and(|s| s.starts_with('F'))));
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn losing_closed_quipu_compares_greater() {
    let out = quipu(&["compare", "spec:closed:ks=15;ms=6", "spec:open:ks=7,7;ms=7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "Greater");
    let out = quipu(&["compare", "spec:open:ks=1,1,1;ms=1,1", "spec:open:ks=0,1,2;ms=0,2"]);
    assert_eq!(stdout(&out).trim(), "Equal");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["rho", "not-graph6!"],
        vec!["rho", "spec:open:ks=1;ms=1"],
        vec!["frobnicate"],
        vec!["verify-lemmas", "--suite", "no-such-suite"],
        vec!["minimize", "--n", "9", "--d", "2", "--space", "all"],
        vec!["verify-theorem", "--max-k", "1"],
        vec!["rho", "Cs", "--tolerance", "0"],
    ] {
        assert_eq!(quipu(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_byte_stable_across_workers() {
    let args = ["minimize", "--n", "10", "--d", "6", "--space", "sparse", "--format", "json"];
    let a = quipu(&[&args[..], &["--workers", "1"]].concat());
    let b = quipu(&[&args[..], &["--workers", "4"]].concat());
    let c = quipu(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn minimize_formats() {
    let out = quipu(&["minimize", "--n", "9", "--d", "4", "--space", "sparse", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,d,search_space,sound,winners,rho_lo,rho_hi"));
    assert!(lines.next().unwrap().starts_with("9,4,sparse,true,1,"));
    let (v, _) = json(&["minimize", "--n", "9", "--d", "4", "--space", "quipu"]);
    assert_eq!(v["winners"][0]["spec"], "closed:ks=8;ms=0");
    assert_eq!(v["stats"]["audit_failures"], 0);
}

#[test]
fn enumerate_and_classify_agree() {
    let (v, code) = json(&["enumerate", "--n", "7", "--d", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 10);
    for item in v["specs"].as_array().unwrap() {
        let (c, _) = json(&["classify", item["graph6"].as_str().unwrap()]);
        assert_eq!(c["spec"], item["spec"]);
    }
    let (c, _) = json(&["classify", "C~"]);
    assert_eq!(c["spec"], Value::Null);
}

#[test]
fn charpoly_of_path() {
    let (p4, code) = json(&["charpoly", "spec:open:ks=0,3;ms=0"]);
    assert_eq!(code, 0);
    assert_eq!(p4, serde_json::json!(["1", "0", "-3", "0", "1"]));
}

#[test]
fn lemma_suite_runs_and_lists() {
    let out = quipu(&["verify-lemmas", "--suite", "t-inequality"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
    let list = stdout(&quipu(&["verify-lemmas", "--list"]));
    assert!(list.lines().count() >= 10);
}

#[test]
fn exhausted_budget_is_reported() {
    let out = quipu(&["minimize", "--n", "25", "--d", "16", "--budget-secs", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "budget-exceeded");
}
