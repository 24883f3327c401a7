//! Runs the `mm` binary on the fixtures in `tests/data` and compares its
//! reports, minus timing, with `tests/golden`. Set `MM_UPDATE_GOLDEN=1` to
//! rewrite the golden files.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn mm(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mm"));
    cmd.current_dir(crate_dir())
        .args(args)
        .env_remove("MM_PAIR_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("mm runs")
}

fn report(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    assert!(v["timing"]["elapsed_ms"].is_number());
    v.as_object_mut().unwrap().remove("timing");
    v
}

fn check_golden(name: &str, args: &[&str]) -> Value {
    let out = mm(args, &[]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let got = report(&out);
    let path = crate_dir()
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("MM_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want, "report differs from {}", path.display());
    got
}

fn passed(v: &Value) -> bool {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true)
}

#[test]
fn golden_hilbert() {
    let v = check_golden(
        "hilbert",
        &["hilbert", "--input", "tests/data/diagonal.json"],
    );
    assert_eq!(v["result"]["numerator"], "-t1*t2 + 1");
    assert_eq!(v["result"]["hilbert_polynomial"]["rendered"], "X1 + X2 + 1");
    assert!(passed(&v));
}

#[test]
fn golden_mixed_mult() {
    let v = check_golden(
        "mixed-mult",
        &["mixed-mult", "--input", "tests/data/diagonal.json"],
    );
    assert_eq!(v["result"]["coarsened_multiplicity"], 2);
    assert!(passed(&v));
}

#[test]
fn golden_multidegree() {
    let v = check_golden(
        "multidegree",
        &[
            "multidegree",
            "--input",
            "tests/data/diagonal.json",
            "--type",
            "1,0",
        ],
    );
    assert_eq!(v["result"]["degree"], 1);
}

#[test]
fn golden_projdeg() {
    let v = check_golden(
        "projdeg",
        &[
            "projdeg",
            "--input",
            "tests/data/cremona.json",
            "--method",
            "both",
        ],
    );
    assert_eq!(v["result"]["degrees"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["result"]["slicing"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["result"]["formula"], serde_json::json!([1, 2, 1]));
    assert!(passed(&v));
}

#[test]
fn golden_formula() {
    let v = check_golden("formula", &["formula", "--ht2", "--d", "2", "--mu", "1,1"]);
    assert_eq!(v["result"]["degrees"], serde_json::json!([1, 2, 1]));
}

#[test]
fn golden_satfiber() {
    let v = check_golden(
        "satfiber",
        &["satfiber", "--input", "tests/data/cremona.json"],
    );
    assert_eq!(
        v["result"]["dims"],
        serde_json::json!([1, 3, 6, 10, 15, 21, 28])
    );
    assert_eq!(v["result"]["d0_check"]["inferred_e"], 1);
}

#[test]
fn golden_check_g() {
    let v = check_golden(
        "check-g",
        &["check-g", "--input", "tests/data/cremona.json", "--assert"],
    );
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn golden_slice() {
    let v = check_golden(
        "slice",
        &[
            "slice",
            "--input",
            "tests/data/diagonal.json",
            "--type",
            "0,1",
            "--seed",
            "7",
        ],
    );
    assert_eq!(v["result"]["slicing"]["point_count"], 1);
    assert!(passed(&v));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "projdeg",
        "--input",
        "tests/data/cremona.json",
        "--seed",
        "3",
        "--output",
        "compact",
    ];
    let a = mm(&args, &[]);
    let b = mm(&args, &[]);
    assert_eq!(report(&a), report(&b));
}

#[test]
fn formula_for_gorenstein_height_three() {
    let out = mm(&["formula", "--ht3", "--d", "3", "--n", "6"], &[]);
    assert_eq!(
        report(&out)["result"]["degrees"],
        serde_json::json!([13, 9, 3, 1])
    );
    let out = mm(
        &["formula", "--ht3", "--d", "3", "--n", "4", "--delta", "3"],
        &[],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["error"]["kind"], "invalid-argument");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = mm(&["hilbert", "--input", "tests/data/malformed.json"], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed input"));

    let out = mm(&["hilbert", "--input", "tests/data/missing.json"], &[]);
    assert_eq!(out.status.code(), Some(2));

    let out = mm(&["hilbert"], &[]);
    assert_eq!(out.status.code(), Some(2));

    let out = mm(&["formula", "--ht2", "--ht3", "--d", "2"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_variable_is_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("mm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"characteristic": 32003, "blocks": [{"name": "x", "vars": ["x0"]}], "ideal": ["x0*z"]}"#,
    )
    .unwrap();
    let out = mm(&["hilbert", "--input", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identifier"));
}

#[test]
fn failed_checks_exit_one_unless_allowed() {
    let args = [
        "check-g",
        "--input",
        "tests/data/fat_line.json",
        "--s",
        "4",
        "--assert",
    ];
    let out = mm(&args, &[]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["result"]["holds"], false);
    assert!(!passed(&v));

    let mut allowed = args.to_vec();
    allowed.push("--allow-failed-checks");
    assert_eq!(mm(&allowed, &[]).status.code(), Some(0));

    // without --assert the outcome is reported, not checked
    assert_eq!(mm(&args[..5], &[]).status.code(), Some(0));
}

#[test]
fn pair_budget_from_flag_and_environment() {
    let args = [
        "projdeg",
        "--input",
        "tests/data/cremona.json",
        "--method",
        "elimination",
    ];
    let out = mm(&args, &[("MM_PAIR_BUDGET", "1")]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["error"]["kind"], "budget-exceeded");
    assert_eq!(v["result"], Value::Null);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--pair-budget", "100000"]);
    assert_eq!(
        mm(&with_flag, &[("MM_PAIR_BUDGET", "1")]).status.code(),
        Some(0)
    );
}

#[test]
fn formula_method_needs_a_matrix() {
    let dir = std::env::temp_dir().join(format!("mm-cli-nomatrix-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("map.json");
    std::fs::write(
        &path,
        r#"{"characteristic": 32003, "vars": ["x0", "x1"], "map": ["x0", "x1"]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        mm(&["projdeg", "--input", p, "--method", "formula"], &[])
            .status
            .code(),
        Some(2)
    );
    let out = mm(&["projdeg", "--input", p, "--method", "elimination"], &[]);
    assert_eq!(report(&out)["result"]["degrees"], serde_json::json!([1, 1]));
}
