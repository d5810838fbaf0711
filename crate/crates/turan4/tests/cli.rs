//! End-to-end tests of the `t4` binary: formats, exit codes and
//! byte-level reproducibility.

use std::path::PathBuf;
use std::process::{Command, Output};

fn t4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_t4"))
        .args(args)
        .env_remove("TURAN_BUDGET_NODES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

#[test]
fn construct_emits_parseable_t4g() {
    let out = t4(&["construct", "k5line"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# t4 "));
    let (g, labels) = turan4::hypergraph::parse_t4g(&text).expect("parses");
    assert_eq!((g.n(), g.edge_count()), (10, 20));
    assert_eq!(labels.expect("labeled").len(), 10);
    let summary = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(summary.contains("v=10 e=20"));
}

#[test]
fn construct_empty_parity_graph() {
    let out = t4(&["construct", "parity", "--n", "0", "--m", "0"]);
    assert!(out.status.success());
    let (g, _) = turan4::hypergraph::parse_t4g(&stdout(&out)).expect("parses");
    assert_eq!((g.n(), g.edge_count()), (0, 0));
}

#[test]
fn construct_hm_summary_matches_formula() {
    let out = t4(&["construct", "hm", "--m", "4", "--lambda", "1", "--counts-only"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["total"], 4976);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = t4(&["construct", "parity", "--n", "6", "--m", "6", "--seed", "9"]);
    let b = t4(&["construct", "parity", "--n", "6", "--m", "6", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let c = t4(&["construct", "parity", "--n", "6", "--m", "6", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);

    let r1 = t4(&["report"]);
    let r2 = t4(&["report"]);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn alpha_exit_codes_distinguish_status() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("t4_cli_rainbow2.t4g");
    let out = t4(&["construct", "rainbow", "--k", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());

    let solved = t4(&["alpha", path.to_str().unwrap()]);
    assert_eq!(solved.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&solved)).expect("json");
    assert_eq!(v["alpha"], 4);
    assert_eq!(v["status"], "Exact");
    assert!(v["witness"].as_array().unwrap().len() == 4);

    let truncated = t4(&["alpha", path.to_str().unwrap(), "--max-nodes", "3"]);
    assert_eq!(truncated.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&truncated)).expect("json");
    assert_eq!(v["status"], "LowerBoundOnly");
}

#[test]
fn budget_env_var_is_honored() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("t4_cli_circular2.t4g");
    let out = t4(&["construct", "circular", "--m", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let truncated = Command::new(env!("CARGO_BIN_EXE_t4"))
        .args(["alpha", path.to_str().unwrap()])
        .env("TURAN_BUDGET_NODES", "2")
        .output()
        .expect("binary runs");
    assert_eq!(truncated.status.code(), Some(2));
}

#[test]
fn report_contains_the_headline_row() {
    let out = t4(&["report"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| 65 | 0.706335 |"), "{text}");
    assert!(text.contains("| 5 | 0.833334 | 5/6 |"));
    // external rows flagged
    assert!(text.contains("| 8 | 0.765046 |") && text.contains("| no |"));
}

#[test]
fn bounds_csv_and_json_carry_exact_values() {
    let csv = t4(&["bounds", "table9", "--format", "csv", "--restarts", "2"]);
    assert!(csv.status.success());
    let text = stdout(&csv);
    // header comment + column header + 16 rows
    assert_eq!(text.lines().count(), 18);
    assert!(text.lines().any(|l| l.starts_with("65,0.706335,")));

    let json = t4(&["bounds", "table9", "--format", "json", "--restarts", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("json");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let row65 = rows.iter().find(|r| r["k"] == 65).unwrap();
    assert_eq!(row65["decimal"], "0.706335");
    assert!(row65["t_star"].as_str().unwrap().contains('/'));
}

#[test]
fn verify_suites_pass() {
    let out = t4(&["verify", "tables"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    let vacuous = t4(&["verify", "invariants", "--samples", "0"]);
    assert_eq!(vacuous.status.code(), Some(0), "{}", stdout(&vacuous));
}

#[test]
fn optimizer_json_output() {
    let out = t4(&["optimize", "example2", "--restarts", "4", "--seed", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["x"].as_array().unwrap().len(), 8);
    let num: f64 = v["value_certified_num"].as_str().unwrap().parse().unwrap();
    let den: f64 = v["value_certified_den"].as_str().unwrap().parse().unwrap();
    assert!(num / den < 0.80262);
}

#[test]
fn usage_errors_exit_three() {
    let out = t4(&["construct", "nonsense"]);
    assert_eq!(out.status.code(), Some(3));
    let out = t4(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(3));
    let out = t4(&["alpha", "/nonexistent/file.t4g"]);
    assert_eq!(out.status.code(), Some(3));
}
