//! End-to-end tests of the command-line interface: output schemas, exit
//! codes, and determinism.

use std::process::{Command, Output};

fn xilambda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xilambda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn gen_xi_1_json_schema() {
    let out = xilambda(&["gen", "--family", "xi", "--n", "1", "--no-timestamp"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["family"], "xi");
    assert_eq!(doc["n"], 1);
    assert_eq!(doc["degree"], 0);
    assert_eq!(doc["leading"], "1/4");
    assert_eq!(doc["value_at_0"], "1/4");
    assert_eq!(doc["value_at_1"], "1/4");
    let coeffs = doc["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["t"], 0);
    assert_eq!(coeffs[0]["num"], "1");
    assert_eq!(coeffs[0]["den"], "4");
    assert!(doc["meta"]["timestamp"].is_null());
    assert_eq!(doc["meta"]["tool_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn gen_timestamp_present_by_default() {
    let out = xilambda(&["gen", "--family", "xi", "--n", "1"]);
    let doc = stdout_json(&out);
    assert!(doc["meta"]["timestamp"].is_string());
}

#[test]
fn gen_lambda_1_csv_row() {
    let out = xilambda(&["gen", "--family", "lambda", "--n", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0,1,7\n");
}

#[test]
fn gen_csv_has_one_row_per_coefficient() {
    let out = xilambda(&["gen", "--family", "xi", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 5);
    for (t, row) in rows.iter().enumerate() {
        assert!(row.starts_with(&format!("{t},")), "row: {row}");
        assert_eq!(row.split(',').count(), 3);
    }
}

#[test]
fn gen_rejects_out_of_range_n() {
    let out = xilambda(&["gen", "--family", "xi", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xilambda(&["gen", "--family", "xi", "--n", "65"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = xilambda(&["gen", "--family", "xi", "--n", "1", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_structural_small_passes() {
    let out = xilambda(&[
        "verify",
        "--suite",
        "structural",
        "--n-max",
        "3",
        "--no-timestamp",
    ]);
    let doc = stdout_json(&out);
    let names: Vec<&str> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["structural", "eulerian", "pi_multiple", "property"]);
    for suite in doc["suites"].as_array().unwrap() {
        for check in suite["checks"].as_array().unwrap() {
            assert_ne!(check["status"], "fail", "{check}");
        }
    }
}

#[test]
fn verify_exceeding_cap_needs_force() {
    let out = xilambda(&["verify", "--suite", "structural", "--n-max", "13"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xilambda(&[
        "verify",
        "--suite",
        "structural",
        "--n-max",
        "13",
        "--force",
        "--no-timestamp",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_hard_cap_is_final() {
    let out = xilambda(&[
        "verify",
        "--suite",
        "structural",
        "--n-max",
        "65",
        "--force",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_rejects_silly_digits() {
    let out = xilambda(&["verify", "--suite", "integral", "--n-max", "1", "--digits", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_integral_n1_passes() {
    let out = xilambda(&[
        "verify",
        "--suite",
        "integral",
        "--n-max",
        "1",
        "--digits",
        "10",
        "--no-timestamp",
    ]);
    let doc = stdout_json(&out);
    let suite = &doc["suites"][0];
    assert_eq!(suite["name"], "integral");
    let names: Vec<&str> = suite["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"integral-beta-vs-reference"));
    assert!(names.contains(&"integral-zeta-vs-reference"));
    assert!(names.contains(&"anchor-beta2-over-pi"));
    assert!(names.contains(&"dual-route-agreement"));
}

#[test]
fn verify_all_n2_passes_quickly() {
    let out = xilambda(&[
        "verify", "--suite", "all", "--n-max", "2", "--digits", "10", "--threads", "2",
        "--no-timestamp",
    ]);
    let doc = stdout_json(&out);
    let names: Vec<&str> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["structural", "eulerian", "pi_multiple", "property", "roots", "integral"]
    );
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "structural",
        "--n-max",
        "2",
        "--no-timestamp",
    ];
    let a = xilambda(&args);
    let b = xilambda(&args);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = xilambda(&[
        "gen",
        "--family",
        "lambda",
        "--n",
        "2",
        "--no-timestamp",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["coefficients"].as_array().unwrap().len(), 2);
}

#[test]
fn roots_lambda_2_single_interval() {
    let out = xilambda(&["roots", "--family", "lambda", "--n", "2", "--no-timestamp"]);
    let doc = stdout_json(&out);
    let report = &doc["root_report"];
    assert_eq!(report["intervals"].as_array().unwrap().len(), 1);
    assert_eq!(report["all_real"], true);
    assert_eq!(report["all_simple"], true);
    assert_eq!(report["all_in_unit"], true);
    assert_eq!(report["largest_root_bound_ok"], true);
    assert_eq!(doc["interlacing_with_previous"], true);
    let iv = &report["intervals"][0];
    assert!(iv["lo_decimal"].as_str().unwrap().starts_with("0.66666666"));
    assert_eq!(iv["sign_change_count_delta"], 1);
}

#[test]
fn roots_xi_1_empty_info() {
    let out = xilambda(&["roots", "--family", "xi", "--n", "1", "--no-timestamp"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["root_report"]["intervals"].as_array().unwrap().len(), 0);
    let checks = doc["suites"][0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["status"], "info");
}

#[test]
fn roots_lambda_10_nine_sorted_intervals() {
    let out = xilambda(&[
        "roots",
        "--family",
        "lambda",
        "--n",
        "10",
        "--width-bits",
        "40",
        "--no-timestamp",
    ]);
    let doc = stdout_json(&out);
    let intervals = doc["root_report"]["intervals"].as_array().unwrap();
    assert_eq!(intervals.len(), 9);
    let los: Vec<f64> = intervals
        .iter()
        .map(|iv| iv["lo_decimal"].as_str().unwrap().parse().unwrap())
        .collect();
    for w in los.windows(2) {
        assert!(w[0] < w[1], "intervals must be sorted: {los:?}");
    }
    assert!(los.iter().all(|&x| (0.0..1.0).contains(&x)));
}

#[test]
fn roots_rejects_bad_width() {
    let out = xilambda(&["roots", "--family", "xi", "--n", "2", "--width-bits", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
