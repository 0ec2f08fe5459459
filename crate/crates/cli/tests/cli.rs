use std::process::{Command, Output};

use serde_json::Value;

fn dlrev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlrev")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn revert_catalan() {
    let out = dlrev(&["revert", "--coeffs", r#"["0","1","-1"]"#, "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(strings(&stdout_json(&out)), ["0", "1", "1", "2", "5", "14"]);
}

#[test]
fn revert_matches_fixed_point_recursion() {
    // q = t/(1 - q) iterated from 0 gives the same coefficients.
    let order = 9;
    let mut q = vec![0i64; order];
    for _ in 0..order {
        let mut geo = vec![0i64; order];
        geo[0] = 1;
        let mut pow = geo.clone();
        for _ in 1..order {
            let mut next = vec![0i64; order];
            for i in 0..order {
                for j in 0..order - i {
                    next[i + j] += pow[i] * q[j];
                }
            }
            pow = next;
            for i in 0..order {
                geo[i] += pow[i];
            }
        }
        let mut nq = vec![0i64; order];
        nq[1..].copy_from_slice(&geo[..order - 1]);
        q = nq;
    }
    let out = dlrev(&["revert", "--coeffs", r#"["0","1","-1"]"#, "--order", &order.to_string()]);
    let expected: Vec<String> = q.iter().map(|c| c.to_string()).collect();
    assert_eq!(strings(&stdout_json(&out)), expected);
}

#[test]
fn hankel_of_catalan() {
    let out = dlrev(&["hankel", "--seq", r#"["1","1","2","5","14"]"#, "--shift", "0", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(strings(&stdout_json(&out)), ["1", "1", "1"]);
}

#[test]
fn verify_suite_exit_code() {
    let out = dlrev(&["verify", "--suite", "thm4", "--order", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["passed"], Value::Bool(true));
}

#[test]
fn unknown_suite_is_validation_error() {
    let out = dlrev(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "Malformed");
}

#[test]
fn malformed_rational_is_exit_2() {
    let out = dlrev(&["revert", "--coeffs", r#"["abc"]"#]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "MalformedRational");
}

#[test]
fn empty_coefficients_and_bad_flags() {
    let out = dlrev(&["revert", "--coeffs", "[]"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "EmptyCoefficients");
    let out = dlrev(&["revert", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "ParseError");
}

#[test]
fn revert_rejects_nonzero_constant() {
    let out = dlrev(&["revert", "--coeffs", r#"["1","1"]"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_object_input_is_normalized() {
    let out = dlrev(&["revert", "--coeffs", r#"{"order":3,"coeffs":["0","2/4","1/6"]}"#]);
    assert_eq!(strings(&stdout_json(&out)), ["0", "2", "-4/3"]);
    let out = dlrev(&["revert", "--coeffs", r#"{"order":4,"coeffs":["0","1"]}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_output() {
    let out = dlrev(&["qser", "--coeffs", r#"["1","1","1"]"#, "--n", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0,1,1,2,4");
}

#[test]
fn dl_polynomials_for_one_plus_x() {
    // s = 1 + x gives P_n = (1 + x)^{n-1}.
    let out = dlrev(&["dl", "--coeffs", r#"["1","1"]"#, "--n", "3"]);
    let v = stdout_json(&out);
    assert_eq!(strings(&v["p"][2]), ["1", "2", "1"]);
    assert_eq!(v["n_max"], 3);
}

#[test]
fn jfrac_round_trip() {
    let out = dlrev(&["jfrac", "--seq", r#"["1","1","2","5","14","42","132","429"]"#, "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let jf = stdout_json(&out);
    assert_eq!(jf["d0"], "1");
    assert_eq!(strings(&jf["q"]), ["1", "1", "1"]);
    let back = dlrev(&["jfrac", "--fraction", &jf.to_string()]);
    assert_eq!(strings(&stdout_json(&back)), ["1", "1", "2", "5", "14", "42", "132", "429"]);
}

#[test]
fn transforms() {
    let out = dlrev(&["transform", "--seq", r#"["1","1","2","5"]"#, "--kind", "binomial", "--x", "1"]);
    assert_eq!(strings(&stdout_json(&out)), ["1", "2", "5", "15"]);
    // a = 1/(1 - t) gives a/(1 + t a) = 1.
    let out = dlrev(&["transform", "--seq", r#"["1","1","1","1"]"#, "--kind", "inverse", "--k", "1"]);
    assert_eq!(strings(&stdout_json(&out)), ["1", "0", "0", "0"]);
}

#[test]
fn interp_endpoints() {
    let a = r#"["1","3","-1/2","2"]"#;
    let out = dlrev(&["interp", "--coeffs", a, "--tau", "0"]);
    // 1/A for A = 1 + 3x - x^2/2 + 2x^3.
    assert_eq!(strings(&stdout_json(&out)), ["1", "-3", "19/2", "-32"]);
}

#[test]
fn enum_outputs() {
    let out = dlrev(&["enum", "luka", "--n", "6"]);
    assert_eq!(stdout_json(&out).as_array().unwrap().len(), 42);
    let out = dlrev(&["enum", "motzkin", "--n", "5", "--weights"]);
    let v = stdout_json(&out);
    assert_eq!(v.as_array().unwrap().len(), 21);
    assert!(v[0]["weight"].is_string());
    let out = dlrev(&["enum", "trees", "--n", "5", "--orbits"]);
    let v = stdout_json(&out);
    assert_eq!(v[0]["total"], 42);
    assert_eq!(v[1]["total"], 42);
    let out = dlrev(&["enum", "trees", "--n", "11", "--orbits"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dlrev_cli::run(["dlrev", "hankel", "--seq", r#"["1","1","2","5","14"]"#, "--n", "3"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap().trim(), r#"["1","1","1"]"#);
}

#[test]
fn parse_series_normalizes() {
    let s = dlrev_cli::parse_series(r#"{"order":3,"coeffs":["1","1/2","1/6"]}"#, None).unwrap();
    assert_eq!(s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(), ["1", "1/2", "1/6"]);
    let s = dlrev_cli::parse_series(r#"["2/4"]"#, Some(2)).unwrap();
    assert_eq!(s.coeffs()[0].to_string(), "1/2");
    assert_eq!(s.order(), 2);
    assert!(dlrev_cli::parse_series("\"abc\"", None).is_err());
}
