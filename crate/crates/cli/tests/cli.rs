use serde_json::Value;
use zchelp::{run_with, EXIT_INCOMPLETE, EXIT_NONTRIVIAL, EXIT_OK, EXIT_OUT_OF_SCOPE, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("zchelp").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

#[test]
fn order_24_in_sl2_23_is_trivial() {
    let (code, v) = run_json(&["solve", "--q", "23", "--n", "24"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["complete"], true);
    assert_eq!(v["all_trivial"], true);
    let survivors = v["survivors"].as_array().unwrap();
    assert_eq!(survivors.len(), 1);
    assert_eq!(survivors[0]["trivial"], true);
}

#[test]
fn classes_of_sl2_5() {
    let (code, v) = run_json(&["classes", "--q", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["classes"].as_array().unwrap().len(), 9);

    let (code, out, _) = run(&["classes", "--q", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 10);
    assert!(out.starts_with("label,order,size,torus\n"));
}

#[test]
fn out_of_scope_orders_exit_2() {
    let (code, out, err) = run(&["solve", "--q", "5", "--n", "15"]);
    assert_eq!(code, EXIT_OUT_OF_SCOPE);
    assert!(out.is_empty());
    assert!(err.contains("5 divides"));
    assert_eq!(run(&["solve", "--q", "5", "--n", "7"]).0, EXIT_OUT_OF_SCOPE);
}

#[test]
fn rendering_is_deterministic() {
    for fmt in ["json", "csv", "text"] {
        let a = run(&["solve", "--q", "11", "--n", "12", "--no-normalize", "--format", fmt]);
        let b = run(&["solve", "--q", "11", "--n", "12", "--no-normalize", "--format", fmt]);
        assert_eq!(a, b, "{fmt}");
    }
}

#[test]
fn unbounded_problems_exit_4_with_no_survivors() {
    let (code, out, _) = run(&["solve", "--q", "23", "--n", "24", "--chars", "1"]);
    assert_eq!(code, EXIT_INCOMPLETE);
    assert!(out.contains("\"survivors\": []"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["provenance"]["status"], "unbounded");
    assert_eq!(v["complete"], false);
}

#[test]
fn node_cap_exits_4() {
    let (code, v) = run_json(&["solve", "--q", "31", "--n", "32", "--no-normalize", "--node-cap", "1"]);
    assert_eq!(code, EXIT_INCOMPLETE);
    assert_eq!(v["provenance"]["status"], "node-cap");
}

#[test]
fn nontrivial_survivors_exit_3() {
    let (code, v) = run_json(&["solve", "--q", "7", "--n", "8", "--chars", "2", "--ells", "4"]);
    assert_eq!(code, EXIT_NONTRIVIAL);
    assert_eq!(v["complete"], true);
    assert_eq!(v["all_trivial"], false);
    let eps = &v["survivors"][0]["eps"];
    assert_eq!((eps["2"].as_i64(), eps["3"].as_i64()), (Some(2), Some(-1)));
}

#[test]
fn projection_with_rows_one_and_five_is_unbounded() {
    let args = ["solve", "--q", "11", "--n", "12", "--chars", "1", "--no-normalize", "--projection"];
    let (code, v) = run_json(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["survivors"].as_array().unwrap().len(), 2);
    let mut restricted = args.to_vec();
    restricted.extend(["--ells", "1,5"]);
    assert_eq!(run(&restricted).0, EXIT_INCOMPLETE);
}

#[test]
fn custom_power_data_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("power.json");
    let data = zchelp_core::helpengine::PowerData::of_element(12, 5);
    std::fs::write(&path, serde_json::to_string(&data).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    let (code, v) =
        run_json(&["solve", "--q", "11", "--n", "12", "--mode", "custom", "--power-data", p, "--no-normalize"]);
    assert_eq!(code, EXIT_OK);
    assert!(v["survivors"].as_array().unwrap().iter().any(|s| s["eps"]["5"] == 1));

    assert_eq!(run(&["solve", "--q", "11", "--n", "12", "--mode", "custom"]).0, EXIT_USAGE);
    assert_eq!(run(&["solve", "--q", "11", "--n", "12", "--power-data", p]).0, EXIT_USAGE);
}

#[test]
fn verify_all_small_fields() {
    let (code, v) = run_json(&["verify-all", "--q", "5,7,9,11,13"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["complete"] == true && r["all_trivial"] == true));
    assert!(rows.iter().any(|r| r["q"] == 11 && r["n"] == 12));
    assert!(rows.iter().any(|r| r["q"] == 13 && r["n"] == 14));
}

#[test]
fn verify_all_includes_order_24() {
    let (code, v) = run_json(&["verify-all", "--q", "23"]);
    assert_eq!(code, EXIT_OK);
    assert!(v["rows"].as_array().unwrap().iter().any(|r| r["n"] == 24 && r["all_trivial"] == true));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["verify-all"]).0, EXIT_USAGE);
    assert_eq!(run(&["solve", "--q", "7"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["solve", "--q", "6", "--n", "5"]).0, EXIT_USAGE);
    assert_eq!(run(&["prop41", "--r", "2"]).0, EXIT_USAGE);
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("solve"));
    assert_eq!(run(&["--version"]).0, EXIT_OK);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let (code, out, _) = run(&["basis", "--n", "24", "--output", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 24);
}

#[test]
fn expand_and_basis() {
    let (code, v) = run_json(&["expand", "--n", "12", "--zeta", "-1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["e"], -1);
    let (code, v) = run_json(&["expand", "--n", "24", "--alpha", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["i"], 5);
    assert_eq!(run(&["expand", "--n", "12"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["basis", "--n", "60", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("n = 60\n"));
}

#[test]
fn prime_power_orders() {
    let (code, v) = run_json(&["prop41", "--r", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["q"], 7);
    assert_eq!(v["normalized"]["all_trivial"], true);
    let (code, out, _) = run(&["identities", "--r", "5", "--samples", "50", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.contains("FAIL"));
}

#[test]
fn case_analysis_exit_codes() {
    let (code, v) = run_json(&["cases", "--n", "24", "--d", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["contradiction"], true);
    assert_eq!(v["profiles"], 2);
    let (code, v) = run_json(&["cases", "--n", "24", "--d", "2"]);
    assert_eq!(code, EXIT_NONTRIVIAL);
    assert_eq!(v["contradiction"], false);
    assert_eq!(v["evading"][0]["nu"], serde_json::json!([10]));
}
