use std::process::{Command, Output};

use overcolored::report::{CsvRow, Status};
use overcolored::SuiteReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overcolored"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_values() {
    let o = run(&["compute", "--r", "1", "--s", "1", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "8");

    let o = run(&["compute", "--r", "2", "--s", "3", "--n", "0"]);
    assert_eq!(stdout(&o).trim(), "1");

    let o = run(&["compute", "--r", "2", "--s", "1", "--n", "10", "--cross-check"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn compute_ranges_kinds_and_moduli() {
    let o = run(&["compute", "--from", "0", "--to", "3"]);
    assert_eq!(stdout(&o), "0 1\n1 2\n2 4\n3 8\n");

    let o = run(&["compute", "--n", "3", "--modulus", "3"]);
    assert_eq!(stdout(&o).trim(), "2");

    // a_{1,1} is the partition function
    let o = run(&["compute", "--kind", "colored", "--n", "10", "--cross-check"]);
    assert_eq!(stdout(&o).trim(), "42");

    let even = run(&["compute", "--kind", "even-over", "--r", "3", "--from", "0", "--to", "20"]);
    let full = run(&["compute", "--r", "3", "--s", "1", "--from", "0", "--to", "20"]);
    assert_eq!(stdout(&even), stdout(&full));

    let o = run(&["--format", "json", "compute", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["value"], "4");
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&["compute", "--r", "0", "--n", "3"])), 1);
    assert_eq!(code(&run(&["compute"])), 1);
    assert_eq!(code(&run(&["compute", "--n", "10", "--order", "5"])), 1);
    assert_eq!(code(&run(&["verify", "--suite", "thm7", "--nmax", "10", "--order", "20"])), 1);
    assert_eq!(code(&run(&["verify", "--suite", "nope"])), 1);
    assert_eq!(code(&run(&["--jobs", "0", "list", "--n", "1"])), 1);
    assert_eq!(code(&run(&["list", "--n", "40"])), 1);
    assert_eq!(code(&run(&["verify", "--suite", "thm8", "--primes", "9"])), 1);
}

#[test]
fn list_objects() {
    let o = run(&["list", "--r", "1", "--s", "1", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 8);

    let o = run(&["list", "--n", "0"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), vec!["∅"]);

    let o = run(&["list", "--r", "2", "--s", "1", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("thm7.json");
    let o = run(&[
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "verify",
        "--suite",
        "thm7",
        "--kmax",
        "2",
        "--nmax",
        "300",
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let report = SuiteReport::from_json(&text).unwrap();
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.suite, "thm7");
    assert!(report.claims.iter().any(|c| c.label == "1.20"));
    assert_eq!(SuiteReport::from_json(&report.to_json().unwrap()).unwrap(), report);
}

#[test]
fn csv_and_json_agree() {
    let json = run(&["--format", "json", "verify", "--suite", "lemma22", "--nmax", "50"]);
    let csv = run(&["--format", "csv", "verify", "--suite", "lemma22", "--nmax", "50"]);
    let report = SuiteReport::from_json(&stdout(&json)).unwrap();
    let mut reader = csv::Reader::from_reader(csv.stdout.as_slice());
    let rows: Vec<CsvRow> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows, report.csv_rows());
}

#[test]
fn negative_controls_are_expected_failures() {
    let o = run(&["--format", "json", "verify", "--suite", "thm5", "--negative-controls", "--nmax", "200"]);
    assert_eq!(code(&o), 0);
    let report = SuiteReport::from_json(&stdout(&o)).unwrap();
    let control = report.claims.iter().find(|c| c.label == "1.52-control").unwrap();
    assert_eq!(control.status, Status::Violated);
}

#[test]
fn identities_report_includes_dissection() {
    let o = run(&["--format", "json", "verify", "--suite", "identities", "--order", "512"]);
    assert_eq!(code(&o), 0);
    let report = SuiteReport::from_json(&stdout(&o)).unwrap();
    let d = report.claims.iter().find(|c| c.label == "2.1").unwrap();
    assert_eq!(d.status, Status::Verified);
}

#[test]
fn scan_exit_codes() {
    let o = run(&["scan", "--kmax", "1", "--nmax", "200"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("consistent at depth"));

    let o = run(&["scan", "--kmax", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 claims"));
}

#[test]
fn exit_codes_ignore_thread_count() {
    let one = run(&["--jobs", "1", "--format", "csv", "verify", "--suite", "thm7", "--kmax", "1", "--nmax", "100"]);
    let four = run(&["--jobs", "4", "--format", "csv", "verify", "--suite", "thm7", "--kmax", "1", "--nmax", "100"]);
    assert_eq!(code(&one), code(&four));
    let strip = |o: &Output| -> Vec<CsvRow> {
        csv::Reader::from_reader(o.stdout.as_slice())
            .deserialize()
            .map(Result::unwrap)
            .collect()
    };
    assert_eq!(strip(&one), strip(&four));
}
