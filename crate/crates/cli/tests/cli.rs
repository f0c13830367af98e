use std::process::{Command, Output};

use alexpara::poset::FinitePoset;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alexpara"))
        .args(args)
        .env_remove("ALEXPARA_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn catalog_list_and_show() {
    let list = json(&["--json", "catalog", "list"]);
    assert_eq!(list.as_array().unwrap().len(), 8);
    let show = json(&["--json", "catalog", "show", "int_vectors", "k=2"]);
    assert_eq!(show["expected"]["radius"], 2);
    assert_eq!(show["expected"]["width"], "infinite");
    let text = String::from_utf8(run(&["catalog", "list"]).stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("width_join")));
}

#[test]
fn bad_input_exits_with_two() {
    let out = run(&["catalog", "show", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown example `nosuch`"));
    assert_eq!(code(&["catalog", "show", "int_vectors", "k=0"]), 2);
    assert_eq!(code(&["catalog", "show", "int_vectors", "k"]), 2);
    assert_eq!(code(&["check", "--law", "nosuch"]), 2);
    assert_eq!(code(&["invariants"]), 2);
}

#[test]
fn hasse_edge_counts() {
    let h = json(&["--json", "--depth", "1", "hasse", "int_vectors", "k=2"]);
    assert_eq!(h["elements"].as_array().unwrap().len(), 5);
    assert_eq!(h["covers"].as_array().unwrap().len(), 4);
    let c = json(&["--json", "--depth", "3", "hasse", "int_chain"]);
    assert_eq!(c["covers"].as_array().unwrap().len(), 6);
    let dot = String::from_utf8(run(&["--depth", "1", "hasse", "int_vectors", "--dot"]).stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn window_json_round_trips_through_poset() {
    let out = run(&["--json", "--depth", "2", "window", "width_join", "n=2", "--shape", "default"]);
    assert!(out.status.success());
    let p = FinitePoset::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(p.width(), 2);
    assert_eq!(p.is_iterated_antichain_join(), Some(2));
}

#[test]
fn check_exit_codes() {
    // an expected failure is not an error
    let out = run(&["--json", "check", "--law", "inversion_monotone", "--example", "int_chain"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let o = &v["outcomes"][0];
    assert_eq!((o["status"].as_str(), o["matched"].as_bool()), (Some("fail"), Some(true)));
    assert!(!o["witness"].as_array().unwrap().is_empty());
    assert_eq!(v["seed"], 42);
    assert_eq!(code(&["check", "--law", "hyperconnected", "--example", "disjoint_chains_int", "n=2"]), 0);
    assert_eq!(code(&["--depth", "2", "check", "--law", "group_axioms,no_torsion", "--example", "width_join"]), 0);
}

#[test]
fn check_text_output_marks_outcomes() {
    let out = run(&["check", "--law", "inversion_monotone,group_axioms", "--example", "int_vectors"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 2, "{text}");
}

#[test]
fn seed_is_recorded() {
    let v = json(&["--json", "--seed", "7", "check", "--law", "group_axioms", "--example", "int_chain"]);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["outcomes"][0]["seed"], 7);
}

#[test]
fn enumerate_is_deterministic_and_confirms() {
    let args = ["--json", "enumerate", "--max-order", "4"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 5);
    assert!(reports.iter().all(|r| r["non_discrete_survivors"].as_array().unwrap().is_empty()));
    let top = json(&["--json", "enumerate", "--max-order", "3", "--topological"]);
    let connected: Vec<&str> = top
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| !r["connected_survivors"].as_array().unwrap().is_empty())
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    assert_eq!(connected, ["C1"]);
    assert_eq!(code(&["enumerate", "--max-order", "7"]), 2);
}

#[test]
fn invariants_of_example_and_file() {
    let v = json(&["--json", "--depth", "2", "invariants", "width_join", "n=2", "--shape", "default"]);
    assert_eq!(v["width"], 2);
    assert_eq!(v["iterated_antichain_join"], 2);
    let path = std::env::temp_dir().join(format!("alexpara-cli-{}.json", std::process::id()));
    let circle = FinitePoset::antichain(2).join(&FinitePoset::antichain(2));
    std::fs::write(&path, circle.to_json()).unwrap();
    let v = json(&["--json", "invariants", "--poset", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v["euler_characteristic"], 0);
    assert_eq!(v["beat_points"].as_array().map(Vec::len), Some(0));
}
