use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_leibniz-lab"));
    c.env_remove("LEIBNIZ_LAB_BUDGET");
    c
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_example1() {
    let o = run(&["validate", data("ex1.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Leibniz identity: PASS"));
}

#[test]
fn validate_rejects_non_leibniz_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"field": "Q", "dim": 2, "products": [
            {"left": 0, "right": 0, "result": {"1": "1"}},
            {"left": 0, "right": 1, "result": {"0": "1"}}]}"#,
    )
    .unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Leibniz identity: FAIL"));
}

#[test]
fn analyze_example2_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = run(&["analyze", data("ex2.json").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema"], "leibniz-report/1");
    assert_eq!(v["flags"]["nilpotent"], false);
    assert_eq!(v["flags"]["solvable"], true);
    assert_eq!(v["certificate"]["dichotomy"], "leib_in_n");
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let file = data("standard_gf3.json");
    let args = ["analyze", file.to_str().unwrap(), "--seed", "7", "--oracle", "--budget", "1000"];
    let one = run(&args);
    let two = run(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    assert!(stdout(&one).contains("Oracle minimality: PASS"));
}

#[test]
fn certificate_failure_is_still_exit_zero() {
    let o = run(&["analyze", data("counterexample.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FAILED at irreducibility"));
}

#[test]
fn oracle_minimality_prints_census() {
    let o = run(&["oracle", "minimality", data("ex1_gf5.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Minimality: PASS"));
    assert!(text.contains("Subspaces enumerated: 8"));
}

#[test]
fn budget_refusal_exits_two() {
    let file = data("ex1_gf5.json");
    let o = run(&["oracle", "minimality", file.to_str().unwrap(), "--budget", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .env("LEIBNIZ_LAB_BUDGET", "3")
        .args(["oracle", "nilradical", file.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_over_rationals_is_an_input_error() {
    let o = run(&["oracle", "minimality", data("ex1.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["analyze"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn construct_then_transplant_then_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("std.json");
    let gf = dir.path().join("std3.json");
    let o = run(&["construct", "standard", "--coeffs", "2,0", "--field", "Q", "-o", q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["transplant", q.to_str().unwrap(), "--to-gf", "3", "-o", gf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&gf).unwrap(), std::fs::read(data("standard_gf3.json")).unwrap());
    let o = run(&["oracle", "nilradical", gf.to_str().unwrap()]);
    assert!(stdout(&o).contains("Nilradical: dim 2"));
}

#[test]
fn construct_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    let out = out.to_str().unwrap();
    assert_eq!(run(&["construct", "standard", "--coeffs", "0,1", "-o", out]).status.code(), Some(1));
    assert_eq!(run(&["construct", "chain", "--j", "2", "--k", "3", "--field", "GF(3)", "-o", out]).status.code(), Some(1));
    assert_eq!(run(&["construct", "cyclic", "--dim", "2", "--top", "0,0,0", "-o", out]).status.code(), Some(1));
    assert_eq!(run(&["construct", "cyclic", "--dim", "2", "--top", "0,0", "-o", out]).status.code(), Some(0));
}

#[test]
fn quotient_and_closure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let ex2 = data("ex2.json");
    let o = run(&["quotient", ex2.to_str().unwrap(), "--ideal", "0,1,0,0,0;0,0,0,1,0;0,0,0,0,1", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["validate", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("2-dimensional"));
    let o = run(&["quotient", ex2.to_str().unwrap(), "--ideal", "1,0,0,0,0", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let ex1 = data("ex1.json");
    let o = run(&["closure", ex1.to_str().unwrap(), "--elements", "1,0"]);
    assert!(stdout(&o).contains("dim 2"));
    let o = run(&["closure", ex1.to_str().unwrap(), "--elements", "0,1", "--ideal"]);
    assert!(stdout(&o).contains("Ideal closure: dim 1 span{(0,1)}"));
}

#[test]
fn oracle_core_frattini_and_minimal_ideals() {
    let file = data("standard_gf3.json");
    let f = file.to_str().unwrap();
    let o = run(&["oracle", "core", f, "--subalgebra", "1,0,0"]);
    assert!(stdout(&o).contains("Agreement: PASS"));
    assert_eq!(run(&["oracle", "core", f]).status.code(), Some(1));
    let o = run(&["oracle", "frattini", f]);
    assert!(stdout(&o).contains("Frattini ideal: 0"));
    let o = run(&["oracle", "minimal-ideals", f]);
    assert!(stdout(&o).contains("Minimal ideals: 1"));
}

#[test]
fn field_mismatch_in_file_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ce.json");
    let text = std::fs::read_to_string(data("counterexample.json")).unwrap().replace("Q(i)", "Q");
    std::fs::write(&path, text).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2i"));
}
