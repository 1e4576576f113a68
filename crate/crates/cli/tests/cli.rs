//! End-to-end checks of the command-line surface: JSON shape, exit codes,
//! and report determinism.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn tourtile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tourtile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.stderr.is_empty(),
        "unexpected stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn bounds_for_k4() {
    let out = tourtile(&["bounds", "--k", "4"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["frac_tiling_lower"], "12");
    assert_eq!(json["frac_tiling_upper"], "20");
    assert_eq!(json["general_threshold"], "19/20");
    assert_eq!(json["absorbing_upper"], "13/14");
}

#[test]
fn bounds_rejects_missing_constants_without_envelope() {
    let out = tourtile(&["bounds", "--k", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tourtile(&["bounds", "--k", "9", "--upper-bound-mode"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["upper_bound_mode"], true);
}

#[test]
fn parse_reports_line_errors_and_fails() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "111").unwrap();
    writeln!(file, "1x1").unwrap();
    let out = tourtile(&[
        "parse",
        "--n",
        "3",
        "--input",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout_json(&out);
    assert_eq!(json[0]["ok"], true);
    assert_eq!(json[0]["min_total"], 2);
    assert_eq!(json[1]["ok"], false);
}

#[test]
fn tile_and_witness_output() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // Transitive tournament on 8 vertices.
    writeln!(file, "{}", "1".repeat(28)).unwrap();
    let witness_path = file.path().with_extension("witness.json");
    let out = tourtile(&[
        "tile",
        "--k",
        "4",
        "--n",
        "8",
        "--input",
        file.path().to_str().unwrap(),
        "--witness",
        witness_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json[0]["tileable"], true);
    assert!(witness_path.exists());
    std::fs::remove_file(witness_path).unwrap();
}

#[test]
fn frac_emits_exact_rationals() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // Cyclic triangle: empty hypergraph, optimum 0.
    writeln!(file, "101").unwrap();
    let out = tourtile(&[
        "frac",
        "--k",
        "3",
        "--n",
        "3",
        "--input",
        file.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json[0]["nu_star"], "0");
    assert_eq!(json[0]["tau_star"], "0");
}

#[test]
fn sweep_reports_are_deterministic() {
    let args = [
        "sweep",
        "--k",
        "4",
        "--n",
        "10",
        "--samples",
        "4",
        "--seed",
        "7",
    ];
    let a = tourtile(&args);
    let b = tourtile(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ramsey_value_for_k3() {
    let out = tourtile(&["ramsey", "--k", "3", "--n-max", "6"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["value"], 4);
    assert_eq!(json["witness_n"], 3);
}

#[test]
fn enumerate_free_classes() {
    let out = tourtile(&[
        "enumerate",
        "--n",
        "7",
        "--predicate",
        "tk-free",
        "--k",
        "4",
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["classes_examined"], 456);
    assert_eq!(json["classes_satisfying"], 1);
}

#[test]
fn construct_and_linking() {
    let out = tourtile(&["construct", "--which", "ex39", "--k", "4", "--n", "11"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["n"], 11);
    assert_eq!(json["complete"], true);

    let out = tourtile(&["linking", "--seed", "5", "--count", "2"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json.as_array().unwrap().len(), 2);
    assert_eq!(json[0]["z"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_appendix_on_shipped_data() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/appendix.txt");
    let out = tourtile(&["verify-appendix", "--input", data.to_str().unwrap()]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["count"], 43);
    assert_eq!(json["all_untileable"], true);
    assert_eq!(json["pairwise_nonisomorphic"], true);
}
