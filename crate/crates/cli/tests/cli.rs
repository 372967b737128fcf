use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metahecke")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn all_checks_pass(v: &Value) -> bool {
    v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true)
}

#[test]
fn classify_the_long_element() {
    let v = json(&["coset", "classify", "--mat", "0", "1", "-1", "0"]);
    assert_eq!(v["result"], serde_json::json!({"kind": "W", "n": 0}));
}

#[test]
fn shimura_table_for_three_weights() {
    let v = json(&["forms", "shimura", "--r", "13", "17", "21"]);
    let table = &v["result"]["table"];
    let col = table["columns"].as_array().unwrap().iter().position(|c| c == "lambda2").unwrap();
    let lambdas: Vec<&str> = table["rows"].as_array().unwrap().iter().map(|r| r[col].as_str().unwrap()).collect();
    assert_eq!(lambdas, ["-24", "216", "456"]);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"r = 13: lambda_2 = -24 both sides"));
    assert!(all_checks_pass(&v));
}

#[test]
fn empty_table_exits_cleanly() {
    let v = json(&["forms", "shimura"]);
    assert!(v["result"]["table"]["rows"].as_array().unwrap().is_empty());
    assert!(v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn verify_commands_report_checks() {
    for args in [
        &["hecke", "verify-relations", "--range", "5"][..],
        &["hecke", "center"],
        &["cocycle", "verify", "--samples", "100", "--seed", "7"],
        &["coset", "decompose", "--label", "T", "--n", "2"],
        &["intertwiner", "verify", "--order", "12", "--gamma", "-i"],
        &["hecke", "convolve", "--lhs", "T(1)", "--rhs", "U(-1)", "--at", "0", "1", "-1", "0", "--sign", "-1"],
        &["forms", "steinberg", "--r", "9"],
        &["forms", "basis", "--kind", "S-", "--r", "13"],
        &["psmodule", "--x", "-1*sqrt2"],
    ] {
        let v = json(args);
        assert!(!v["checks"].as_array().unwrap().is_empty(), "{args:?}");
        assert!(all_checks_pass(&v), "{args:?}");
    }
}

#[test]
fn verify_relations_count() {
    let v = json(&["hecke", "verify-relations", "--range", "5"]);
    assert_eq!(v["result"]["identities"], 130);
}

#[test]
fn hecke_product() {
    let v = json(&["hecke", "mul", "--lhs", "U(1)", "--rhs", "U(1)"]);
    assert_eq!(v["result"]["product"], "(1)*T(0)");
}

#[test]
fn output_is_deterministic() {
    let args = ["cocycle", "verify", "--samples", "50", "--seed", "11", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["forms", "basis", "--kind", "S", "--r", "17", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn errors_go_to_stderr_with_nonzero_exit() {
    for args in [
        &["coset", "classify", "--mat", "1", "2", "3", "4"][..],
        &["coset", "classify", "--mat", "1", "x/2", "0", "1"],
        &["forms", "basis", "--kind", "S", "--r", "13", "--precision", "5"],
        &["forms", "basis", "--kind", "Q", "--r", "13"],
        &["psmodule", "--x", "0"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = run(&["forms", "basis", "--kind", "S", "--r", "13", "--precision", "5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("need at least"));
}

#[test]
fn gamma_flag_reaches_both_characters() {
    let plus = json(&["ktypes"]);
    let minus = json(&["ktypes", "--gamma", "-i"]);
    assert_eq!(plus["inputs"]["gamma"], "i");
    assert_eq!(minus["inputs"]["gamma"], "-i");
    assert!(all_checks_pass(&plus) && all_checks_pass(&minus));
}
