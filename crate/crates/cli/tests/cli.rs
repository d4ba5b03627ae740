//! End-to-end runs of the `hwmod` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn hwmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hwmod")).args(args).output().expect("run hwmod")
}

fn json(args: &[&str]) -> Value {
    let out = hwmod(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    hwmod(args).status.code().unwrap()
}

#[test]
fn envelope() {
    let v = json(&["roots", "G2"]);
    assert_eq!(v["tool"], "hwmod");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["spec"]["root_system"], "G2");
    assert!(v["depth"].is_null());
    assert_eq!(v["result"]["positive_roots"].as_array().unwrap().len(), 6);
}

#[test]
fn weights_of_the_adjoint_representation() {
    let v = json(&["weights", "A2", "--lambda", "1,1", "--depth", "6"]);
    assert_eq!(v["result"]["agree"], true);
    for f in ["A", "B", "C"] {
        assert_eq!(v["result"]["formulas"][f]["count"], 7, "{f}");
    }
    let v = json(&["weights", "A1", "--lambda", "-1/2", "--class", "verma", "--depth", "4", "--formulas", "b"]);
    assert_eq!(v["result"]["formulas"]["B"]["count"], 5);
    assert!(v["result"]["formulas"]["A"].is_null());
}

#[test]
fn hull_and_faces() {
    let v = json(&["hull", "A2", "--lambda", "1,1", "--class", "verma"]);
    assert_eq!(v["result"]["polyhedron"]["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"]["polyhedron"]["inequalities"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["polyhedron"]["basis"], "simple_roots");
    let v = json(&["faces", "A2", "--lambda", "1,1"]);
    assert_eq!(v["result"]["faces"].as_array().unwrap().len(), 13);
}

#[test]
fn off_output() {
    let dir = std::env::temp_dir().join(format!("hwmod-off-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hexagon.off");
    let p = path.to_str().unwrap();
    json(&["hull", "A2", "--lambda", "1,1", "--off", p]);
    let off = std::fs::read_to_string(&path).unwrap();
    let mut lines = off.lines();
    assert_eq!(lines.next(), Some("OFF"));
    assert_eq!(lines.next(), Some("6 1 0"));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code(&["hull", "A1", "--lambda", "1", "--off", "/dev/null"]), 3);
}

#[test]
fn characters() {
    let v = json(&["character", "A2", "--lambda", "1,1", "--depth", "6", "--check-oracle"]);
    assert_eq!(v["result"]["total"], 8);
    assert_eq!(v["result"]["weights"].as_array().unwrap().len(), 7);
    assert_eq!(v["result"]["oracle"]["agree"], true);
    let v = json(&["character", "A1", "--lambda", "0", "--depth", "4"]);
    assert_eq!(v["result"]["total"], 1);
}

#[test]
fn verify_and_minmax_pass() {
    let v = json(&["verify", "B2", "--samples", "4", "--seed", "3", "--depth", "3"]);
    assert_eq!(v["result"]["all_passed"], true);
    assert!(v["result"]["failures"].as_array().unwrap().is_empty());
    let v = json(&["minmax", "A2", "--lambda", "1,1/2", "--jprime", "1"]);
    assert_eq!(v["result"]["all_equivalent"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["weights", "A2", "--lambda", "1"]), 1);
    assert_eq!(code(&["weights", "Q7", "--lambda", "1"]), 1);
    assert_eq!(code(&["weights", "A2", "--lambda", "1,x"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["character", "A2", "--lambda", "-1,-1"]), 4);
    assert_eq!(code(&["minmax", "A2", "--lambda", "1,-1", "--jprime", "2"]), 5);
    let out = Command::new(env!("CARGO_BIN_EXE_hwmod"))
        .args(["hull", "E8", "--lambda", "1,1,1,1,1,1,1,1"])
        .env("HWMOD_ENUM_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "A2", "--samples", "5", "--seed", "11", "--depth", "4"][..],
        &["weights", "G2", "--lambda", "1,-1/3", "--class", "pverma:1", "--depth", "4", "--format", "text"][..],
    ] {
        let a = hwmod(args);
        let b = hwmod(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn output_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("hwmod-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let direct = hwmod(&["roots", "B3"]).stdout;
    assert_eq!(code(&["roots", "B3", "--output", p]), 0);
    assert_eq!(std::fs::read(&path).unwrap(), direct);
    std::fs::remove_file(&path).unwrap();
}
