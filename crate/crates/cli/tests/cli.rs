//! End-to-end CLI checks: exit codes, JSON report shape, and the
//! construct -> verify round trip.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_k3cubic")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn temp_dir() -> PathBuf {
    let dir = std::env::temp_dir().join("k3cubic_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn lattice_subcommand_prints_discriminant() {
    let out = Command::new(bin())
        .args(["lattice", "--s2", "38", "--deg", "10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["discriminant"], 14);
    assert_eq!(body["admissible_divisor"], true);
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = Command::new(bin()).args(["verify", "--nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_subcommand() {
    let out = Command::new(bin())
        .args(["invariants", "--witness"])
        .arg(fixture("surface_typeII_p5.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["degree"], 10);
    assert_eq!(body["sectional"]["genus"], 7);
    assert_eq!(body["h0_ideal"]["2"], 1);
}

#[test]
fn groebner_subcommand_dumps_basis() {
    let out = Command::new(bin())
        .args(["groebner", "--witness"])
        .arg(fixture("surface_typeII_p5.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(body.as_array().unwrap().len() >= 7);
}

#[test]
fn construct_then_verify_round_trip() {
    let out_path = temp_dir().join("roundtrip.json");
    let out = Command::new(bin())
        .args(["construct", "--seed", "7", "--fixture"])
        .arg(fixture("k3_genus7_p7.json"))
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let report_path = temp_dir().join("roundtrip_report.json");
    let out = Command::new(bin())
        .args(["verify", "--seed", "3", "--witness"])
        .arg(&out_path)
        .arg("--out")
        .arg(&report_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "pass");
    // every check cites an anchor: no anonymous checks
    for check in report["checks"].as_array().unwrap() {
        assert!(!check["anchor"].as_str().unwrap().is_empty());
        assert!(!check["name"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_failure_has_exit_code_one() {
    // edit the expected euler number; the report fails exactly that check
    let src = std::fs::read_to_string(fixture("surface_typeII_p5.json")).unwrap();
    let mut bundle: serde_json::Value = serde_json::from_str(&src).unwrap();
    bundle["expected"]["euler"] = serde_json::json!(25);
    let path = temp_dir().join("edited.json");
    std::fs::write(&path, serde_json::to_string(&bundle).unwrap()).unwrap();
    let out = Command::new(bin())
        .args(["verify", "--witness"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "fail");
    let failed: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["euler_noether_cross_check"]);
}

#[test]
fn missing_witness_is_engine_error() {
    let out = Command::new(bin())
        .args(["verify", "--witness", "/nonexistent/file.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn prime_mismatch_is_engine_error() {
    let out = Command::new(bin())
        .args(["verify", "--prime", "101", "--witness"])
        .arg(fixture("surface_typeII_p5.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
