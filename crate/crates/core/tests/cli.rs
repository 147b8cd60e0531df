use qgauss::exactnum::Cyclotomic;
use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgauss")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8 output");
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {text}"));
    (out.status.code().expect("exit code"), value)
}

fn cyclotomic(v: &Value) -> Cyclotomic {
    Cyclotomic::from_json(v).expect("cyclotomic JSON")
}

#[test]
fn gauss_sum_round_trips_through_json() {
    let (code, v) = run(&["gauss", "--matrix", "A2", "--a", "1", "--c", "5"]);
    assert_eq!(code, 0);
    assert_eq!(cyclotomic(&v["value"]), Cyclotomic::from_integer(-5));
    assert_eq!(v["value"]["pretty"], "-5");
}

#[test]
fn both_methods_report_agreement() {
    let (code, v) = run(&["gauss-closed", "--matrix", "[[2,1],[1,4]]", "--a", "3", "--c", "11", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
    assert_eq!(cyclotomic(&v["brute"]), cyclotomic(&v["closed"]));

    let (code, v) = run(&["count", "--matrix", "A2", "--v", "0,0", "--m", "1", "--c", "5", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!((v["brute"].as_str(), v["closed"].as_str()), (Some("6"), Some("6")));

    let (code, v) = run(&["subsum", "--matrix", "A2", "--a", "1", "--c", "5", "--hyperplane", "1,2", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);

    let (code, v) = run(&["hecke", "quad", "--d", "2", "--v0", "1", "--v1", "0", "--c1", "3", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(cyclotomic(&v["closed"]), Cyclotomic::from_integer(3));
}

#[test]
fn identity_checks_report_equality() {
    let (code, v) = run(&["duality-check", "--matrix", "A2", "--a", "1", "--c", "5", "--subgroup", r#"{"c":5,"gens":[[1,2]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
    assert_eq!(cyclotomic(&v["lhs"]), cyclotomic(&v["rhs"]));

    let (code, v) = run(&["milgram", "--matrix", "U", "--c", "-7"]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);

    let (code, v) = run(&["markoff", "--coeffs", "1,1,1,0,0,0,3", "--p", "5"]);
    assert_eq!(code, 0);
    assert_eq!((v["brute"].as_i64(), v["closed"].as_i64(), v["case"].as_i64()), (Some(41), Some(41), Some(1)));

    let (code, v) = run(&["hecke", "cyc", "--p", "13", "--v", "1,2,3,4,5,6,7,8,9,10,11,12", "--c1", "37", "--method", "closed"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["value"]["pretty"], "2565726409");
}

#[test]
fn input_errors_exit_with_two_and_a_json_body() {
    for args in [
        vec!["gauss", "--matrix", "[[1]]", "--a", "1", "--c", "5"],
        vec!["gauss", "--matrix", "A2", "--a", "1", "--c", "0"],
        vec!["gauss-closed", "--matrix", "[[2]]", "--a", "1", "--c", "6"],
        vec!["count", "--matrix", "A2", "--v", "0,0", "--m", "1", "--c", "6", "--method", "closed"],
        vec!["verify", "--seed", "1", "--suite", "nope"],
        vec!["frobnicate"],
        vec!["markoff", "--coeffs", "1,1,1", "--p", "5"],
    ] {
        let (code, v) = run(&args);
        assert_eq!(code, 2, "{args:?} -> {v}");
        assert!(v["error"].is_string() && v["detail"].is_string(), "{args:?} -> {v}");
    }
}

#[test]
fn help_and_version_succeed() {
    for flag in ["--help", "--version"] {
        let out = Command::new(env!("CARGO_BIN_EXE_qgauss")).arg(flag).output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn weil_routes_agree() {
    let (code, v) = run(&["weil", "--matrix", "A2", "--element", "2,1,5,3", "--route", "all"]);
    assert_eq!(code, 0, "{v}");
    let agreement = v["agrees_with_word"].as_object().expect("agreement map");
    assert!(!agreement.is_empty());
    assert!(agreement.values().all(|x| x == true), "{v}");
}

#[test]
fn verify_output_is_independent_of_thread_count() {
    let outputs: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|t| {
            let out = Command::new(env!("CARGO_BIN_EXE_qgauss"))
                .args(["--threads", t, "verify", "--seed", "9", "--suite", "hyperplane,hecke"])
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    let v: Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(v["all_passed"], true);
}
