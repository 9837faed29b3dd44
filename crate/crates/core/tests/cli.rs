//! End-to-end runs of the command line front end, in process.

use std::path::PathBuf;

use hyperrlct::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperrlct").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperrlct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const FOUR_PLANES: &str =
    r#"{"normals": [[1,0,0],[0,1,0],[0,0,1],[1,1,1]], "multiplicities": [1,2,2,1]}"#;

#[test]
fn compute_json_file() {
    let path = temp_file("four.json", FOUR_PLANES);
    let doc = json(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(doc["lambda"], "1/2");
    assert_eq!(doc["m"], 3);
    assert_eq!(doc["central"], true);
    assert_eq!(doc["witness_chain"].as_array().unwrap().len(), 3);
}

#[test]
fn compute_poly() {
    let doc = json(&["compute", "--poly", "x*y"]);
    assert_eq!(doc["lambda"], "1");
    assert_eq!(doc["m"], 2);
}

#[test]
fn compute_csv_and_human() {
    let (code, out, _) = invoke(&["compute", "--poly", "x^2*y^3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "lambda,m\n1/3,1\n");
    let (code, out, _) = invoke(&["compute", "--poly", "x*y*(x+y)", "--format", "human"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("rlct = (2/3, 1)"), "{out}");
}

#[test]
fn mismatched_multiplicities_is_a_usage_error() {
    let path = temp_file("bad.json", r#"{"normals": [[1,0],[0,1]], "multiplicities": []}"#);
    let (code, out, err) = invoke(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("multiplicities"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["compute"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["compute", "--poly", "x", "--input", "f.json"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["compute", "--poly", "x*y^"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
    let (code, _, err) = invoke(&["compute", "--input", "/nonexistent/arrangement.json"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot read"));
}

#[test]
fn verify_flag() {
    let doc = json(&["compute", "--poly", "x*y*z*(x+y)*(y+z)*(x+y+z)", "--verify"]);
    let v = &doc["verification"][0];
    assert_eq!(v["lattice"], "ok");
    assert_eq!(v["chain"], "ok");
    let doc = json(&["compute", "--poly", "x*y^2*(x-y)^3", "--verify"]);
    assert_eq!(doc["verification"][0]["closed_form"], "ok");
}

#[test]
fn localize_central_input_has_one_point() {
    let central = json(&["compute", "--poly", "x*y^2*z^2*(x+y+z)"]);
    let doc = json(&["localize", "--poly", "x*y^2*z^2*(x+y+z)"]);
    let locs = doc["localizations"].as_array().unwrap();
    assert_eq!(locs.len(), 1);
    assert_eq!(locs[0]["point"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(doc["lambda"], central["lambda"]);
    assert_eq!(doc["m"], central["m"]);
}

#[test]
fn affine_inputs() {
    let doc = json(&["compute", "--poly", "x*(x-1)"]);
    assert_eq!(doc["central"], false);
    assert_eq!((doc["lambda"].as_str(), doc["m"].as_u64()), (Some("1"), Some(1)));
    assert_eq!(doc["localizations"].as_array().unwrap().len(), 2);

    // Two parallel planes of multiplicity 2 never meet.
    let path = temp_file(
        "parallel.json",
        r#"{"normals": [[0,0,1],[0,0,1]], "offsets": [0,-1], "multiplicities": [2,2]}"#,
    );
    let doc = json(&["localize", "--input", path.to_str().unwrap(), "--verify"]);
    assert_eq!((doc["lambda"].as_str(), doc["m"].as_u64()), (Some("1/2"), Some(1)));

    let (code, out, _) = invoke(&["localize", "--poly", "x*y*(x+y-1)", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 4, "{out}");
    assert!(out.starts_with("point,members,lambda,m\n"));
}

#[test]
fn csv_input() {
    let path = temp_file("planes.csv", "x,y,z,mult\n1,0,0,1\n0,1,0,2\n0,0,1,2\n1,1,1,1\n");
    let doc = json(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(doc["lambda"], "1/2");
    assert_eq!(doc["m"], 3);
}

#[test]
fn parse_roundtrips_through_csv() {
    let (code, csv, _) = invoke(&["parse", "--poly", "vars x,y; x^2*(x+y-1)*(2y)", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let path = temp_file("roundtrip.csv", &csv);
    let (_, again, _) = invoke(&["parse", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(csv, again);

    let (_, human, _) = invoke(&["parse", "--poly", "y*x*x", "--format", "human"]);
    let doc = json(&["parse", "--poly", human.trim()]);
    assert_eq!(doc["polynomial"], human.trim());
}

#[test]
fn volume_fit_self_test() {
    let doc = json(&["volume-fit", "--self-test"]);
    assert_eq!(doc["self_test"], true);
    assert!((doc["fit"]["lambda_hat"].as_f64().unwrap() - 0.5).abs() < 1e-6);
    assert!((doc["fit"]["m_hat"].as_f64().unwrap() - 3.0).abs() < 1e-6);
}

#[test]
fn volume_fit_sampling_is_deterministic() {
    let args = ["volume-fit", "--poly", "x*y", "--samples", "20000", "--seed", "7", "--eps-min", "1e-3"];
    let (code, first, err) = invoke(&args);
    assert_eq!(code, EXIT_OK, "{err}");
    let (_, second, _) = invoke(&args);
    assert_eq!(first, second);
    let doc: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["samples"].as_array().unwrap().len(), 9);
    assert!(doc["fit"]["lambda_hat"].as_f64().unwrap().is_finite());
}

#[test]
fn volume_fit_data_out_and_box() {
    let out_path = std::env::temp_dir().join(format!("hyperrlct-cli-{}-vol.dat", std::process::id()));
    let (code, _, err) = invoke(&[
        "volume-fit", "--poly", "x", "--samples", "5000", "--eps-min", "1e-2", "--eps-max", "1e-1",
        "--eps-points", "4", "--box", "-2,2", "--format", "human", "--data-out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let data = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(data.lines().filter(|l| !l.starts_with('#')).count(), 4);
    assert_eq!(invoke(&["volume-fit", "--poly", "x", "--eps-max", "2"]).0, EXIT_USAGE);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["localize", "--poly", "x^2*y*(x-1)*(y-1)^3*(x+y)", "--verify"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}
