use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hoopforge::suite::SuiteReport;

const TERMINAL: &str = "hoop T\nelements 1\nunit 0\nmul\n0\nimp\n0\n";
// 0*(0->1) = 0 but 1*(1->0) = 1 with this implication
const BROKEN: &str = "hoop Bad\nelements 2\nunit 1\nmul\n0 0\n0 1\nimp\n1 1\n1 1\n";

fn hoopforge(args: &[&str], corpus: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hoopforge"));
    cmd.args(args);
    match corpus {
        Some(dir) => cmd.env("HOOPFORGE_CORPUS", dir),
        None => cmd.env_remove("HOOPFORGE_CORPUS"),
    };
    cmd.output().expect("binary runs")
}

fn report(out: &Output) -> SuiteReport {
    serde_json::from_slice(&out.stdout).expect("report on stdout")
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("terminal.hoop");
    let b = dir.path().join("broken.hoop");
    fs::write(&t, TERMINAL).unwrap();
    fs::write(&b, BROKEN).unwrap();

    let ok = hoopforge(&["check", t.to_str().unwrap()], None);
    assert_eq!(ok.status.code(), Some(0));

    let out = dir.path().join("r.json");
    let bad = hoopforge(
        &["check", b.to_str().unwrap(), "--out", out.to_str().unwrap()],
        None,
    );
    assert_eq!(bad.status.code(), Some(1));
    let r: SuiteReport = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let w = r.checks[0].witness.as_deref().unwrap();
    assert!(w.starts_with("AxiomViolation"), "{w}");

    assert_eq!(hoopforge(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        hoopforge(&["check", "/no/such/file"], None).status.code(),
        Some(2)
    );
}

#[test]
fn bijection_suite_reports_equal_counts() {
    let out = hoopforge(
        &[
            "suite",
            "bijection",
            "--max-order",
            "3",
            "--variety",
            "basic",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.checks.len(), 16);
    assert!(r.passed());
}

#[test]
fn failing_check_replays_alone() {
    let out = hoopforge(
        &["suite", "axioms", "--max-order", "2", "--only", "axioms/L7"],
        None,
    );
    let r = report(&out);
    assert_eq!(r.checks.len(), 1);
    assert_eq!(
        r.checks[0].replay,
        "hoopforge suite axioms --max-order 2 --only 'axioms/L7'"
    );
}

#[test]
fn corpus_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let save = hoopforge(
        &[
            "enumerate",
            "--max-order",
            "3",
            "--save",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(save.status.code(), Some(0));
    let enumerated = report(&hoopforge(&["suite", "filters", "--max-order", "3"], None));
    let loaded = report(&hoopforge(
        &["suite", "filters", "--max-order", "3"],
        Some(dir.path()),
    ));
    assert_eq!(loaded.checks, enumerated.checks);
    assert_eq!(loaded.params.corpus, dir.path().display().to_string());

    fs::write(
        dir.path().join("h3-001.hoop"),
        BROKEN.replace("Bad", "h3-001"),
    )
    .unwrap();
    let bad = hoopforge(&["suite", "filters", "--max-order", "3"], Some(dir.path()));
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("h3-001.hoop"));
}

#[test]
fn reports_are_deterministic_across_job_counts() {
    let a = report(&hoopforge(
        &["suite", "lalg", "--max-order", "3", "--jobs", "1"],
        None,
    ));
    let b = report(&hoopforge(
        &["suite", "lalg", "--max-order", "3", "--jobs", "4"],
        None,
    ));
    assert_eq!(a.without_timing(), b.without_timing());
}
