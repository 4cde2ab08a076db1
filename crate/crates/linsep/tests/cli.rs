//! End-to-end tests of the `linsep` binary: flag surface, file outputs,
//! and exit codes (0 success, 1 usage, 2 I/O or parse, 3 failed verify).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn linsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_two_point_csv(path: &Path) {
    fs::write(path, "f0,label\n100,-1\n101,1\n").unwrap();
}

fn write_xor_csv(path: &Path) {
    fs::write(path, "f0,f1,label\n0,1,1\n1,0,1\n0,0,-1\n1,1,-1\n").unwrap();
}

#[test]
fn help_exits_zero() {
    let out = linsep(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    let gen_help = linsep(&["gen", "--help"]);
    assert_eq!(exit_code(&gen_help), 0);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = linsep(&["gen", "--n", "5", "--d", "2", "--seed", "1", "--bogus"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn gen_writes_dataset_and_reference() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("data.csv");
    let out = linsep(&[
        "gen", "--n", "100", "--d", "3", "--seed", "7",
        "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next().unwrap(), "f0,f1,f2,label");
    assert_eq!(text.lines().count(), 101);

    let reference = dir.path().join("data.ref.json");
    let json = fs::read_to_string(&reference).unwrap();
    assert!(json.contains("\"generator\": \"chacha8\""));
    assert!(json.contains("\"seed\": 7"));
}

#[test]
fn gen_same_seed_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = linsep(&[
            "gen", "--n", "64", "--d", "2", "--seed", "11",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(
        fs::read(dir.path().join("a.ref.json")).unwrap(),
        fs::read(dir.path().join("b.ref.json")).unwrap()
    );
}

#[test]
fn gen_rejects_zero_n_with_usage_exit() {
    let dir = tempfile::tempdir().unwrap();
    let out = linsep(&[
        "gen", "--n", "0", "--d", "2", "--seed", "1",
        "--out", dir.path().join("x.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn train_approx_solves_two_point_line_in_one_update() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("line.csv");
    write_two_point_csv(&data);
    let curve = dir.path().join("curve.csv");
    let out = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "approx", "--epsilon", "1e-9",
        "--out", curve.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let summary = stdout(&out);
    assert!(summary.contains("converged=true"), "summary: {summary}");
    assert!(summary.contains("updates=1"), "summary: {summary}");

    // The recovered hyperplane verifies against the original file.
    let plane = dir.path().join("curve.hyperplane.json");
    assert!(plane.exists());
    let verify = linsep(&[
        "verify", "--data", data.to_str().unwrap(),
        "--hyperplane", plane.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&verify), 0);
}

#[test]
fn train_perceptron_reports_non_convergence_on_xor() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("xor.csv");
    write_xor_csv(&data);
    let out = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "perceptron", "--max-epochs", "50",
        "--out", dir.path().join("curve.csv").to_str().unwrap(),
    ]);
    // Non-convergence is an outcome, not an error.
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("converged=false"));
}

#[test]
fn train_on_missing_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = linsep(&[
        "train", "--data", dir.path().join("absent.csv").to_str().unwrap(),
        "--method", "approx",
        "--out", dir.path().join("curve.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn train_on_malformed_csv_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("bad.csv");
    fs::write(&data, "f0,label\nnot_a_number,1\n").unwrap();
    let out = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "approx",
        "--out", dir.path().join("curve.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn train_rejects_unknown_method_and_init() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("line.csv");
    write_two_point_csv(&data);
    let curve = dir.path().join("curve.csv");

    let bad_method = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "svm", "--out", curve.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&bad_method), 1);

    let bad_init = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "approx", "--init", "zeros",
        "--out", curve.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&bad_init), 1);
}

#[test]
fn train_with_trace_writes_trace_csv() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("line.csv");
    write_two_point_csv(&data);
    let curve = dir.path().join("curve.csv");
    let out = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "approx", "--epsilon", "1e-9", "--trace",
        "--out", curve.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let trace = fs::read_to_string(dir.path().join("curve.trace.csv")).unwrap();
    assert!(trace.starts_with("update,triggering_dot,weight_norm\n"));
    // Initial row plus one per update.
    assert_eq!(trace.lines().count(), 3);
}

#[test]
fn train_random_init_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("line.csv");
    write_two_point_csv(&data);
    let out = linsep(&[
        "train", "--data", data.to_str().unwrap(),
        "--method", "approx", "--epsilon", "1e-9",
        "--init", "random", "--seed", "5",
        "--out", dir.path().join("curve.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn compare_writes_combined_curves_for_both_methods() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("compare.csv");
    let out = linsep(&[
        "compare", "--n", "300", "--d", "4", "--seeds", "1,2",
        "--max-epochs", "200",
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("method,seed,epoch,epoch_updates,cumulative_updates,accuracy,wall_ms\n"));
    for needle in ["approx,1,", "approx,2,", "perceptron,1,", "perceptron,2,"] {
        assert!(text.contains(needle), "missing rows for {needle}");
    }
    // Summary table lists one row per method and seed.
    let table = stdout(&out);
    assert_eq!(table.matches("approx").count(), 2);
    assert_eq!(table.matches("perceptron").count(), 2);
}

#[test]
fn compare_accepts_a_single_method() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("compare.csv");
    let out = linsep(&[
        "compare", "--n", "100", "--d", "3", "--seeds", "9",
        "--methods", "approx", "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("approx,9,"));
    assert!(!text.contains("perceptron"));
}

#[test]
fn verify_failure_exits_three_and_prints_count() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    let gen = linsep(&[
        "gen", "--n", "40", "--d", "2", "--seed", "3",
        "--out", data.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&gen), 0);

    // The stored reference verifies cleanly.
    let reference = dir.path().join("data.ref.json");
    let ok = linsep(&[
        "verify", "--data", data.to_str().unwrap(),
        "--hyperplane", reference.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&ok), 0);

    // A flipped normal misclassifies every sample.
    let json = fs::read_to_string(&reference).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for c in value["normal"].as_array_mut().unwrap() {
        *c = serde_json::json!(-c.as_f64().unwrap());
    }
    value["derived_bias"] = serde_json::json!(-value["derived_bias"].as_f64().unwrap());
    let flipped = dir.path().join("flipped.json");
    fs::write(&flipped, serde_json::to_string_pretty(&value).unwrap()).unwrap();

    let fail = linsep(&[
        "verify", "--data", data.to_str().unwrap(),
        "--hyperplane", flipped.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&fail), 3);
    assert!(stdout(&fail).contains("40 violations"));
}

#[test]
fn verify_on_garbage_json_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    write_two_point_csv(&data);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let out = linsep(&[
        "verify", "--data", data.to_str().unwrap(),
        "--hyperplane", bad.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}
