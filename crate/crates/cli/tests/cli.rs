//! End-to-end runs of the `nevanlinna` binary: exit codes, stdout tables,
//! and artifact files.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nevanlinna"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn optimize_kappa_prints_the_stored_minimum() {
    let out = run(&["optimize-kappa"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("\"objective\": 5.30774986799e0"), "{text}");
    assert!(text.contains("\"alpha\": 8.154"), "{text}");
}

#[test]
fn painleve_iv_slope_matches_and_reports_both_modes() {
    let out = run(&["slope", "painleve-IV"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("\"slope\": 1.50000000000e1"), "{text}");
    assert!(text.contains("\"legacy_slope\": 8.00000000000e0"), "{text}");
    assert!(text.contains("\"matches\": true"), "{text}");
}

#[test]
fn painleve_subcommands_accept_lowercase_aliases() {
    let out = run(&["slope", "painleve-i"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"name\": \"painleve-I\""));
}

#[test]
fn characteristic_writes_a_csv_with_matching_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "characteristic",
        "--model",
        "exp(z^2)",
        "--r-grid",
        "2:5:3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("characteristic.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("r,m,n,t,quad_error"));
    // T(2, exp(z^2)) = 4/pi with no poles, so m = t and n = 0
    let first = lines.next().unwrap();
    assert!(first.starts_with("2.00000000000e0,1.27323954474e0,0.00000000000e0,"), "{first}");
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn malformed_grid_is_a_usage_error() {
    let out = run(&["characteristic", "--model", "z^2", "--r-grid", "5::x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--r-grid"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unparseable_model_is_a_usage_error() {
    let out = run(&["characteristic", "--model", "exp(exp(z))", "--r-grid", "2:5:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn clunie_bound_rejects_an_invalid_split() {
    // Q carries total degree 2 > n = 1, so the split must be refused
    let out = run(&[
        "bound",
        "clunie",
        "--equation-p",
        "w",
        "--equation-q",
        "w^2",
        "--n-power",
        "1",
        "--model",
        "tan(z)",
        "--r-grid",
        "10:20:2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mohonko_bound_emits_certificates_per_radius() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "bound",
        "mohonko",
        "--equation",
        "w' - w^2 - 1",
        "--model",
        "tan(z)",
        "--r-grid",
        "10:20:2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = std::fs::read_to_string(dir.path().join("mohonko-certificates.json")).unwrap();
    assert_eq!(json.matches("\"kind\": \"Mohonko62\"").count(), 2);
    assert!(json.contains("\"mode\": \"erratum\""));
}

#[test]
fn gg_check_on_a_normalized_model_exits_clean_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "check",
        "gg",
        "--model",
        "exp(z^2)",
        "--r-grid",
        "5:50:6:log",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("ok"));
    for name in ["gg-model.csv", "gg-model.json", "gg-model.dat", "gg-summary.json"] {
        assert!(dir.path().join(name).exists(), "missing {name}");
    }
}

#[test]
fn gg_check_rejects_models_not_one_at_the_origin() {
    // tan(0) = 0, so the normalization precondition fails
    let out = run(&["check", "gg", "--model", "tan(z)", "--r-grid", "5:20:3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn casebook_is_byte_deterministic() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    for dir in [&dir1, &dir2] {
        let out = run(&["casebook", "--seed", "42", "--out", dir.path().to_str().unwrap()]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let names = sorted_names(dir1.path());
    assert_eq!(names, sorted_names(dir2.path()));
    assert!(names.contains(&"casebook.json".to_string()));
    assert!(names.contains(&"sharpness.csv".to_string()));
    for name in &names {
        let a = std::fs::read(dir1.path().join(name)).unwrap();
        let b = std::fs::read(dir2.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}

fn sorted_names(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}
