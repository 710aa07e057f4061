use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const FERMAT: &str = r#""ring": {"prime": 7, "variables": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]}"#;

fn run(dir: &Path, problem: &str, extra: &[&str]) -> Output {
    let file = dir.join("problem.json");
    fs::write(&file, problem).unwrap();
    Command::new(env!("CARGO_BIN_EXE_ghk"))
        .arg(&file)
        .arg("--out")
        .arg(dir)
        .args(extra)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn check_ring_reports_fermat_cubic() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &format!(r#"{{{FERMAT}, "task": {{"command": "check-ring"}}}}"#), &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let out = stdout(&o);
    assert!(out.contains("dimension 2") && out.contains("degY 3") && out.contains("smooth"), "{out}");
    let rep = json(dir.path(), "check-ring.json");
    assert_eq!(rep["command"], "check-ring");
}

#[test]
fn principal_ideal_lengths_vanish() {
    let dir = TempDir::new().unwrap();
    let p = format!(r#"{{{FERMAT}, "module": {{"quotient": ["x"]}}, "task": {{"command": "ghk", "e_max": 3}}}}"#);
    let o = run(dir.path(), &p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("ghk.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("e,q,length"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows, ["1,7,0", "2,49,0", "3,343,0"]);
}

#[test]
fn point_ideal_estimate_and_report() {
    let dir = TempDir::new().unwrap();
    let p = format!(r#"{{{FERMAT}, "module": {{"quotient": ["z", "3*x-y"]}}, "task": {{"command": "ghk", "e_max": 2}}}}"#);
    let o = run(dir.path(), &p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("4/3"), "{}", stdout(&o));
    let rep = json(dir.path(), "ghk.json");
    assert_eq!(rep["problem"]["module"]["quotient"][1], "3*x-y");
    assert_eq!(rep["result"]["estimate"]["estimate"], "4/3");
    let lengths: Vec<u64> = rep["result"]["table"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["length"].as_u64().unwrap())
        .collect();
    assert_eq!(lengths, [64, 3200]);
}

#[test]
fn reports_are_bit_stable() {
    let dir = TempDir::new().unwrap();
    let p = format!(r#"{{{FERMAT}, "module": {{"quotient": ["z", "3*x-y"]}}, "task": {{"command": "ghk", "e_max": 2}}}}"#);
    assert!(run(dir.path(), &p, &[]).status.success());
    let first = fs::read(dir.path().join("ghk.json")).unwrap();
    let first_csv = fs::read(dir.path().join("ghk.csv")).unwrap();
    assert!(run(dir.path(), &p, &["--jobs", "1"]).status.success());
    assert_eq!(first, fs::read(dir.path().join("ghk.json")).unwrap());
    assert_eq!(first_csv, fs::read(dir.path().join("ghk.csv")).unwrap());
}

#[test]
fn closed_form_point_prints_four_thirds() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), r#"{"closed_form": {"point": {"deg_y": 3}}, "task": {"command": "closed-form"}}"#, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("4/3"), "{}", stdout(&o));
}

#[test]
fn closed_form_two_generated_matches_point() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"closed_form": {"two_generated": {"a": 1, "b": 1, "d": -1, "deg_y": 3}}, "task": {"command": "closed-form"}}"#;
    let o = run(dir.path(), p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("4/3"), "{}", stdout(&o));
}

#[test]
fn schema_error_names_the_path() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"ring": {"prime": 7, "variables": ["x", "y", "z"], "relations": [3]}, "task": {"command": "check-ring"}}"#;
    let o = run(dir.path(), p, &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("ring.relations[0]"), "{err}");
}

#[test]
fn unknown_field_is_rejected() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), r#"{"task": {"command": "ghk", "emax": 2}}"#, &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_prime_is_invalid() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"ring": {"prime": 9, "variables": ["x", "y"]}, "task": {"command": "check-ring"}}"#;
    assert_eq!(run(dir.path(), p, &[]).status.code(), Some(2));
}

#[test]
fn budget_overrun_exits_three_with_partial_report() {
    let dir = TempDir::new().unwrap();
    let p = format!(r#"{{{FERMAT}, "module": {{"quotient": ["z", "3*x-y"]}}, "task": {{"command": "ghk", "e_max": 2}}}}"#);
    let o = run(dir.path(), &p, &["--budget-gb-degree", "20"]);
    assert_eq!(o.status.code(), Some(3), "{o:?}");
    let rep = json(dir.path(), "ghk.json");
    assert_eq!(rep["result"]["table"]["absent"][0]["e"], 2);
    assert_eq!(rep["problem"]["task"]["budgets"]["gb_degree"], 20);
}

#[test]
fn gamma_from_supplied_table() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"ring": {"prime": 7, "variables": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]},
        "task": {"command": "gamma", "e_exact": "4/3", "table": [[0, 0], [1, 64], [2, 3200], [3, 156864]]}}"#;
    let o = run(dir.path(), p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("gamma.csv")).unwrap();
    let gammas: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(gammas, ["-4/3"; 4]);
}

#[test]
fn hk_of_irrelevant_ideal_on_plane() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"ring": {"prime": 5, "variables": ["x", "y"]}, "module": {"quotient": ["x", "y"]},
        "task": {"command": "hk", "e_max": 2}}"#;
    let o = run(dir.path(), p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("hk.csv")).unwrap();
    assert!(csv.lines().any(|l| l == "2,25,625"), "{csv}");
}

#[test]
fn sweep_over_primes() {
    let dir = TempDir::new().unwrap();
    let p = r#"{"ring": {"primes": [5, 7], "variables": ["x", "y", "z"], "relations": ["x^3+y^3-2*z^3"]},
        "module": {"quotient": ["x-y", "y-z"]}, "task": {"command": "sweep", "e_max": 2}}"#;
    let o = run(dir.path(), p, &[]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 2, "{csv}");
    assert!(rows.iter().all(|r| r.contains("4/3")), "{csv}");
    assert_eq!(json(dir.path(), "sweep.json")["result"]["top_half_spread"], "0/1");
}
