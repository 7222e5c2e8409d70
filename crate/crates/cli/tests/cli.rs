use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn fixture(name: &str) -> PathBuf {
    fixtures().join(format!("{name}.conf"))
}

fn nkconf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nkconf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_certifies_and_flags_digons() {
    let out = nkconf(&["validate", arg(&fixture("order8_c"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["certified"], true);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("digon.conf");
    std::fs::write(&bad, "config 4 2\na: P Q\nb: P Q\nc: R S\nd: R S\n").unwrap();
    let out = nkconf(&["validate", arg(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["certified"], false);
    let digons: Vec<&Value> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["kind"] == "digon")
        .collect();
    assert_eq!(digons.len(), 2);
}

#[test]
fn input_errors_and_usage_errors_have_their_own_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "config 3 two\n").unwrap();
    assert_eq!(nkconf(&["validate", arg(&bad)]).status.code(), Some(1));
    assert_eq!(nkconf(&["validate", "/nonexistent/file.conf"]).status.code(), Some(1));
    assert_eq!(
        nkconf(&["validate", arg(&fixture("fano")), "--frobnicate"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nkconf(&["realize", arg(&fixture("fano")), "--max-vars", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nkconf(&["find-sub", arg(&fixture("fano")), "--pattern", "nonsense"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dual_twice_restores_the_incidences() {
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once.conf");
    let out = nkconf(&["dual", arg(&fixture("order8_b")), "--json", arg(&once)]);
    assert_eq!(out.status.code(), Some(0));
    let twice = nkconf(&["dual", arg(&once)]);
    let original =
        nkconfig::incidence::parse_configuration(&std::fs::read_to_string(fixture("order8_b")).unwrap()).unwrap();
    let back = nkconfig::incidence::parse_configuration(std::str::from_utf8(&twice.stdout).unwrap()).unwrap();
    // the dual lists each line's points in label order
    assert!(back.same_incidences(&original));
    assert_eq!(nkconf(&["dual", arg(&once)]).stdout, twice.stdout);
}

#[test]
fn example_tables_pass_both_filters() {
    for name in [
        "example_zero_var",
        "example_one_var",
        "example_two_var_a",
        "example_two_var_b",
    ] {
        let v = json(&nkconf(&["filter", arg(&fixture(name))]));
        assert_eq!(
            (v["pappus"].clone(), v["desargues"].clone()),
            (Value::Bool(true), Value::Bool(true)),
            "{name}"
        );
    }
    let v = json(&nkconf(&["filter", arg(&fixture("synthetic_non_pappus"))]));
    assert_eq!(v["pappus"], false);
    assert!(v["pappus_violation"].is_string());
}

#[test]
fn realize_reports_verdicts_and_draws_witnesses() {
    let v = json(&nkconf(&["realize", arg(&fixture("example_zero_var"))]));
    assert_eq!(v["status"], "NOT_REALIZABLE");
    assert_eq!(v["variables"], 0);

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("pappus.svg");
    let v = json(&nkconf(&["realize", arg(&fixture("pappus")), "--svg", arg(&svg)]));
    assert_eq!(v["status"], "REALIZABLE");
    assert_eq!(v["witness"]["exact"], true);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    let v = json(&nkconf(&[
        "realize",
        arg(&fixture("example_two_var_b")),
        "--max-vars",
        "1",
    ]));
    assert_eq!(v["status"], "UNDECIDED");
}

#[test]
fn cseq_plans_and_checks() {
    let v = json(&nkconf(&["cseq", arg(&fixture("example_two_var_a"))]));
    assert_eq!(v["free_count"], 2);
    let seq = v["sequence"].as_str().unwrap().to_string();
    let w = json(&nkconf(&[
        "cseq",
        arg(&fixture("example_two_var_a")),
        "--sequence",
        &seq,
    ]));
    assert_eq!(w["free_count"], 2);
    assert_eq!(w["sequence"], seq.as_str());
}

#[test]
fn polarity_reads_orders_from_a_witness() {
    let v = json(&nkconf(&["polarity", arg(&fixture("pappus"))]));
    assert_eq!(v["topology"], "witness");
    assert!(v["dualities"].as_u64().unwrap() > 0);
    assert!(v["tolerant_polarities"].as_u64().unwrap() > 0);
}

#[test]
fn report_is_deterministic_and_splits_per_file() {
    let dir = fixtures();
    let a = nkconf(&["report", arg(&dir)]);
    let b = nkconf(&["report", arg(&dir)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "conf"))
        .collect();
    files.sort();
    let mut joined = Vec::new();
    for f in &files {
        joined.extend(nkconf(&["report", arg(f)]).stdout);
    }
    assert_eq!(a.stdout, joined);
    assert_eq!(a.stdout.iter().filter(|&&b| b == b'\n').count(), files.len());
}
