use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rank2_triangle::concurrence::rank2_concurrence_2qubit;
use rank2_triangle::states::catalog;
use serde_json::Value;

const BELL: &str = r#"{"shape": [2, 2], "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#;

fn bin(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank2-triangle"))
        .args(args)
        .current_dir(dir)
        .env_remove("RANK2_TRIANGLE_SEED")
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

#[test]
fn lemma_campaign_reports_zero_violations() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(dir.path(), &["verify-lemma1", "--samples", "100000", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("violations: 0/100000"));
}

#[test]
fn help_lists_every_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(dir.path(), &["--help"]);
    let help = text(&out.stdout);
    for cmd in [
        "verify-lemma1",
        "verify-triangle-concurrence",
        "verify-triangle-l1",
        "verify-roof-sandwich",
        "figure-1",
        "figure-2",
        "eval",
    ] {
        assert!(help.contains(cmd), "{cmd} missing from help");
    }
}

#[test]
fn figure_one_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(
        dir.path(),
        &[
            "figure-1",
            "--grid",
            "101",
            "--samples",
            "200",
            "--seed",
            "1",
            "--format",
            "csv",
            "--output",
            "fig1.csv",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("violations: 0/20200"));

    let rows = fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
    let mut lines = rows.lines();
    assert_eq!(
        lines.next().unwrap(),
        "P,C_rho,sample_id,theta,gamma,phi,sum_C,diff_C,violates_upper,violates_lower"
    );
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 101 * 200);
    assert!(body.iter().all(|l| l.ends_with(",false,false")));
    assert!(!rows.contains('\r'));

    let summary = fs::read_to_string(dir.path().join("fig1_summary.csv")).unwrap();
    let rows: Vec<Vec<f64>> = summary
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 103);
    assert_eq!(rows[0][0], 0.0);
    assert!((rows[0][1] - 0.5).abs() < 1e-12);
    assert_eq!(rows[102][0], 1.0);
    assert!((rows[102][1] - 1.0).abs() < 1e-12);
    let mid = rows.iter().find(|r| (r[0] - 0.5).abs() < 1e-12).unwrap();
    let expected = rank2_concurrence_2qubit(&catalog::example_ensemble(mid[0]).unwrap()).unwrap();
    assert!((mid[1] - expected).abs() < 1e-9);
    for r in &rows {
        // min sum ≥ C(ρ) ≥ max diff; COA is the max sum
        assert!(r[2] >= r[1] - 1e-9 && r[5] <= r[1] + 1e-9);
        assert_eq!(r[6], r[3]);
        assert_eq!((r[7], r[8]), (0.0, 0.0));
    }
}

#[test]
fn figure_two_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(
        dir.path(),
        &["figure-2", "--grid", "5", "--samples", "10", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("figure-2.json")).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 50);
    assert_eq!(v["summary"].as_array().unwrap().len(), 7);
}

#[test]
fn eval_bell_state() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bell.json"), BELL).unwrap();
    let out = bin(dir.path(), &["eval", "--state", "bell.json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["concurrence"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["l1_coherence"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn eval_ensemble_and_basis() {
    let dir = tempfile::tempdir().unwrap();
    let ens = r#"{"shape": [2], "ensemble": {"p1": 0.5, "psi1": [[1, 0], [0, 0]], "psi2": [[1, 0], [1, 0]]}}"#;
    fs::write(dir.path().join("ens.json"), ens).unwrap();
    let h = 0.5f64.sqrt();
    fs::write(
        dir.path().join("h.json"),
        format!("[[[{h},0],[{h},0]],[[{h},0],[{},0]]]", -h),
    )
    .unwrap();

    let out = bin(dir.path(), &["eval", "--state", "ens.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["l1_coherence"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!(v["concurrence"].is_null());
    assert_eq!(v["triangle_convex_roof_l1"]["pass"], Value::Bool(true));

    let out = bin(
        dir.path(),
        &["eval", "--state", "ens.json", "--basis", "h.json", "--format", "csv"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).starts_with("quantity,value\n"));
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let explicit = bin(dir.path(), &["verify-roof-sandwich", "--samples", "200", "--seed", "5"]);
    let from_env = Command::new(env!("CARGO_BIN_EXE_rank2-triangle"))
        .args(["verify-roof-sandwich", "--samples", "200"])
        .env("RANK2_TRIANGLE_SEED", "5")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(explicit.stdout, from_env.stdout);
}

#[test]
fn campaign_summary_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(
        dir.path(),
        &[
            "verify-triangle-concurrence",
            "--dims",
            "2x3",
            "--samples",
            "200",
            "--remixes",
            "10",
            "--output",
            "s.json",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(v["samples"], 200);
    assert_eq!(v["violations"], 0);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn bad_inputs_exit_2_with_context() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.json"),
        r#"{"shape": [2, 2], "amplitudes": [[1, 0]]}"#,
    )
    .unwrap();
    let out = bin(dir.path(), &["eval", "--state", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    let err = text(&out.stderr);
    assert!(err.contains("bad.json") && err.contains("amplitudes"), "{err}");

    let out = bin(dir.path(), &["eval", "--state", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("missing.json"));

    let out = bin(
        dir.path(),
        &[
            "figure-1",
            "--output",
            "no/such/dir/f.csv",
            "--grid",
            "3",
            "--samples",
            "1",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("no/such/dir/f.csv"));

    let out = bin(dir.path(), &["verify-triangle-concurrence", "--dims", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
