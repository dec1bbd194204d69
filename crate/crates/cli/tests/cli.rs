use std::process::{Command, Output};

fn qdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdiv"))
        .args(args)
        .env_remove("QDIV_MAX_ORDER")
        .output()
        .expect("failed to launch qdiv")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out).lines().skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is not JSON")
}

#[test]
fn coeffs_a1_is_sigma_one() {
    let out = qdiv(&["coeffs", "--family", "A", "--k", "1", "--order", "6", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n,coefficient\n"));
    let values: Vec<String> = csv_rows(&out).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(values, ["0", "1", "3", "4", "7", "6", "12"]);
}

#[test]
fn coeffs_below_threshold_are_zero() {
    let out = qdiv(&["coeffs", "--family", "A", "--k", "2", "--order", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(csv_rows(&out).iter().all(|r| r[1] == "0"));
}

#[test]
fn coeffs_c1_every_method() {
    for method in ["direct", "explicit", "recurrence", "oracle"] {
        let out = qdiv(&["coeffs", "--family", "C", "--k", "1", "--order", "3", "--method", method, "--format", "csv"]);
        assert_eq!(code(&out), 0, "{method}");
        let values: Vec<String> = csv_rows(&out).into_iter().map(|r| r[1].clone()).collect();
        assert_eq!(values, ["0", "1", "2", "4"], "{method}");
    }
}

#[test]
fn coeffs_json_shape() {
    let out = qdiv(&["coeffs", "--family", "A", "--k", "2", "--order", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"], 5);
    assert_eq!(v["family"], "A");
    assert_eq!(v["k"], 2);
    assert_eq!(v["coeffs"], serde_json::json!(["0", "0", "0", "1", "3", "9"]));
}

#[test]
fn coeffs_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.csv");
    let out = qdiv(&["coeffs", "--family", "A", "--k", "1", "--order", "4", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "n,coefficient\n0,0\n1,1\n2,3\n3,4\n4,7\n");
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["coeffs", "--family", "A", "--k", "0", "--order", "5", "--method", "explicit"],
        &["coeffs", "--family", "A", "--k", "0", "--order", "5", "--method", "recurrence"],
        &["coeffs", "--family", "A", "--k", "1", "--order", "61", "--method", "oracle"],
        &["coeffs", "--family", "B", "--k", "1", "--order", "5"],
        &["coeffs", "--family", "A", "--k", "1", "--order", "2001"],
        &["decompose", "--k", "2", "--order", "5"],
        &["decompose", "--k", "1", "--weight-bound", "3", "--order", "50"],
        &["verify", "--suite", "agreement", "--k-max", "0", "--order", "20"],
        &["verify", "--format", "csv"],
    ];
    for args in cases {
        let out = qdiv(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn oracle_cap_can_be_lifted() {
    let out = qdiv(&["coeffs", "--family", "A", "--k", "1", "--order", "61", "--method", "oracle", "--allow-slow", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(csv_rows(&out)[61][1], "62");
}

#[test]
fn max_order_env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_qdiv"))
        .args(["coeffs", "--family", "A", "--k", "1", "--order", "11"])
        .env("QDIV_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn decompose_a1() {
    let out = qdiv(&["decompose", "--k", "1", "--order", "100", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a,b,c,coefficient\n0,0,0,1/24\n1,0,0,-1/24\n");
}

#[test]
fn decompose_a2_json() {
    let out = qdiv(&["decompose", "--k", "2", "--order", "120", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "found");
    assert_eq!(v["target"], "A_2");
    assert_eq!(v["weight_bound"], 4);
    assert_eq!(v["verified_order"], 120);
    let terms = v["terms"].as_array().unwrap();
    assert!(!terms.is_empty() && terms.len() <= 4);
    for t in terms {
        assert!(t["coefficient"].is_string());
        assert!(t["a"].is_u64() && t["b"].is_u64() && t["c"].is_u64());
    }
}

#[test]
fn decompose_no_solution_exits_three() {
    let out = qdiv(&["decompose", "--k", "1", "--weight-bound", "0", "--order", "50", "--format", "json"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["status"], "no_solution");
    assert_eq!(v["witness_exponent"], 1);
    assert_eq!(v["target_coefficient"], "1");
    assert_eq!(v["fitted_coefficient"], "0");
}

#[test]
fn decompose_family_c_has_no_solution() {
    let out = qdiv(&["decompose", "--k", "1", "--family", "C", "--order", "50"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("C_1"));
}

#[test]
fn verify_all_defaults_pass() {
    let out = qdiv(&["verify", "--suite", "all", "--k-max", "4", "--order", "100", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r["identity_name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(reports.len(), 11);
    assert!(reports.iter().all(|r| r["status"] == "pass" && r["first_mismatch"].is_null()));
}

#[test]
fn verify_theorem_f_depth() {
    let out = qdiv(&["verify", "--suite", "theorem-f", "--k-max", "0", "--order", "500"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS theorem-F"));
}

#[test]
fn verify_output_is_deterministic() {
    let strip = |out: Output| -> Vec<serde_json::Value> {
        let mut v = json(&out);
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_seconds");
        }
        v.as_array().unwrap().clone()
    };
    let args = ["verify", "--suite", "all", "--k-max", "2", "--order", "30", "--format", "json"];
    assert_eq!(strip(qdiv(&args)), strip(qdiv(&args)));
}
