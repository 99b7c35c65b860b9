use std::process::Command;

use garside_core::cli::{run, Outcome};
use garside_core::bundled;
use serde_json::Value;

fn garside(args: &[&str]) -> Outcome {
    run(std::iter::once("garside").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = garside(&full);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

#[test]
fn normal_form() {
    let out = garside(&["--system", "b3", "nf", "s t s t"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "sts . t\n"));
    let (code, v) = json(&["--system", "b3", "nf", "DELTA s"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["word"].as_array().unwrap().len(), 4);
    assert_eq!(v["result"]["normal_form"][0], serde_json::json!(["s", "t", "s"]));
}

#[test]
fn lattice_ops() {
    let out = garside(&["--system", "b3", "op", "--kind", "lcm", "--side", "left", "s", "t"]);
    assert_eq!(out.stdout, "sts\n");
    let out = garside(&["--system", "b3", "op", "--kind", "gcd", "--side", "right", "s t", "t s t"]);
    assert_eq!(out.stdout, "st\n");
    let out = garside(&["--system", "b4", "op", "--kind", "gcd", "--side", "left", "s1", "s3"]);
    assert_eq!(out.stdout, "1\n");
}

#[test]
fn quasi_center_commands() {
    assert_eq!(garside(&["--system", "b3", "qz-basis"]).stdout, "s t s\n");
    assert_eq!(garside(&["--system", "b3", "tau", "s"]).stdout, "sts\n");
    assert_eq!(garside(&["--system", "square_central", "tau", "b"]).stdout, "aa\n");
    let (_, v) = json(&["--system", "square_central", "qz-basis"]);
    assert_eq!(v["atom_map"]["c"], 1);
    assert_eq!(v["basis"][0]["word"], serde_json::json!(["a", "a"]));
}

#[test]
fn nu_command() {
    let out = garside(&["--system", "b3", "nu", "--parabolic", "s", "--atom", "t"]);
    assert_eq!(out.stdout, "ts : {s} -> {t} (nu)\n");
    let (code, v) = json(&["--system", "delta_root", "nu", "--parabolic", "a", "--atom", "b", "--tilde"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["element"]["word"], serde_json::json!(["a", "b"]));
    assert_eq!(v["result"]["target"], serde_json::json!(["a"]));
    let out = garside(&["--system", "delta_root_corrupted", "nu", "--parabolic", "a", "--atom", "b"]);
    assert_eq!(out.code, 1);
}

#[test]
fn presentation_formats_round_trip() {
    let sys = bundled::b4();
    let p = sys.presentation().unwrap();
    let j = garside(&["--system", "b4", "--format", "json", "presentation"]);
    assert_eq!(j.code, 0);
    assert_eq!(sys.presentation_from_json(&j.stdout).unwrap(), p);
    let r = garside(&["--system", "b4", "--format", "rewriting", "presentation"]);
    assert_eq!(sys.presentation_from_rewriting(&r.stdout).unwrap(), p);
    let t = garside(&["--system", "b4", "presentation"]);
    assert!(t.stdout.contains("relations:"));
    assert_eq!(garside(&["--system", "b4", "--format", "rewriting", "quiver"]).code, 2);
}

#[test]
fn shakers_and_conjugation() {
    let out = garside(&["--system", "b4", "shakers", "--parabolic", "s1,s3"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.starts_with("SH = [s1, s2 s1 s3 s2, s3]\n"));
    let (code, v) = json(&["--system", "b4", "conjugate", "--parabolic", "s1", "s2 s1 s2^-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["a"]["left_fraction"]["denominator"], serde_json::json!(["s1"]));
    assert_eq!(v["result"]["a"]["left_fraction"]["numerator"], serde_json::json!([]));
    assert_eq!(v["result"]["ribbon"]["target"], serde_json::json!(["s2"]));
    let (code, v) = json(&["--system", "b3", "conjugate", "--parabolic", "t", "s"]);
    assert_eq!(code, 1);
    assert!(v["result"].is_null());
}

#[test]
fn verify_command() {
    let out = garside(&["--system", "b3", "verify", "--level", "4"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let (code, v) = json(&["--system", "delta_root_corrupted", "verify", "--level", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    assert!(v["nu_axioms"]["violations"].as_array().unwrap().iter().any(|x| x["axiom"] == 2));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(garside(&["--system", "b3", "nf", "x"]).code, 2);
    assert_eq!(garside(&["--system", "nowhere", "nf", "s"]).code, 2);
    assert_eq!(garside(&["--system", "b3", "nf", "s^-1"]).code, 2);
    assert_eq!(garside(&["--system", "b3", "frobnicate"]).code, 2);
    assert_eq!(garside(&["--system", "square_central", "nu", "--parabolic", "a", "--atom", "b"]).code, 2);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["--system", "b4", "--format", "json", "presentation"][..],
        &["--system", "b4", "verify", "--level", "3"][..],
        &["--system", "square_central", "--format", "json", "shakers", "--parabolic", ""][..],
    ] {
        assert_eq!(garside(args), garside(args));
    }
}

#[test]
fn binary_reads_system_from_environment_and_files() {
    let bin = env!("CARGO_BIN_EXE_garside");
    let out = Command::new(bin).env("GARSIDE_SYSTEM", "b3").args(["nf", "t s s t"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ts . st\n");

    let dir = std::env::temp_dir().join(format!("garside-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("i2_5.json");
    std::fs::write(&file, r#"{"kind":"coxeter","atoms":["x","y"],"coxeter_matrix":[[1,5],[5,1]]}"#).unwrap();
    let out = Command::new(bin)
        .env_remove("GARSIDE_SYSTEM")
        .args(["--system", file.to_str().unwrap(), "qz-basis"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x y x y x\n");

    let out = Command::new(bin).env("GARSIDE_SYSTEM", "b3").args(["conjugate", "--parabolic", "t", "s"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).env_remove("GARSIDE_SYSTEM").args(["nf", "s"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
