use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn wtaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wtaut")).args(args).env_remove("WTAUT_MAX_GENUS").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn poly(v: &Value) -> wtaut::MultiPoly {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn class_of_genus_two_semigroup() {
    let csv = stdout(&wtaut(&["class", "--genus", "2", "--gaps", "1,3", "--format", "csv"]));
    let row = csv.lines().nth(1).unwrap();
    let cell = row.split(',').nth(4).unwrap();
    let expected: wtaut::MultiPoly = "3*psi - lambda1".parse().unwrap();
    assert_eq!(cell.parse::<wtaut::MultiPoly>().unwrap(), expected);

    let v = json(&wtaut(&["class", "--genus", "2", "--gaps", "1,3"]));
    let classes = v["payload"]["classes"].as_array().unwrap();
    assert_eq!(poly(&classes[0]["class_pointed"]), expected);
}

#[test]
fn genus_inferred_from_gaps() {
    let v = json(&wtaut(&["class", "--gaps", "1,2,3"]));
    assert_eq!(v["config"]["genus"], "3");
}

#[test]
fn non_semigroup_is_a_data_error() {
    let out = wtaut(&["class", "--genus", "2", "--gaps", "1,4"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("2+2=4"));
}

#[test]
fn negative_genus_is_a_usage_error() {
    assert_eq!(code(&wtaut(&["semigroups", "--genus", "-1"])), 2);
    assert_eq!(code(&wtaut(&["semigroups"])), 2);
    assert_eq!(code(&wtaut(&["frobnicate"])), 2);
}

#[test]
fn semigroup_counts() {
    for (g, n) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 7)] {
        let v = json(&wtaut(&["semigroups", "--genus", &g.to_string()]));
        assert_eq!(v["payload"]["semigroups"].as_array().unwrap().len(), n, "g={g}");
    }
}

#[test]
fn genus_one_pullback() {
    let v = json(&wtaut(&["pullback", "--genus", "1", "--partition", "2"]));
    let expected: wtaut::MultiPoly = "lambda1^2 - lambda1*psi".parse().unwrap();
    assert_eq!(poly(&v["payload"]["value_lambda"]), expected);
    for method in ["shifted", "determinant"] {
        let w = json(&wtaut(&["pullback", "--genus", "1", "--partition", "2", "--method", method]));
        assert_eq!(poly(&w["payload"]["value_lambda"]), expected, "{method}");
    }
}

#[test]
fn genus_one_hilbert() {
    let v = json(&wtaut(&["hilbert", "--genus", "1", "--max-degree", "4"]));
    let rows = v["payload"]["rows"].as_array().unwrap();
    let col = |k: &str| rows.iter().map(|r| r[k].as_u64().unwrap()).collect::<Vec<_>>();
    assert_eq!(col("lower"), vec![1; 5]);
    assert_eq!(col("upper"), vec![1, 2, 2, 2, 2]);
}

#[test]
fn no_relations_in_low_weight() {
    let v = json(&wtaut(&["relations", "--genus", "2", "--max-weight", "2"]));
    assert!(v["payload"]["generators"].as_array().unwrap().is_empty());
}

#[test]
fn resource_limits() {
    assert_eq!(code(&wtaut(&["semigroups", "--genus", "40"])), 4);
    assert_eq!(code(&wtaut(&["hilbert", "--genus", "2", "--max-degree", "17"])), 4);
    let out = Command::new(env!("CARGO_BIN_EXE_wtaut"))
        .args(["semigroups", "--genus", "13"])
        .env("WTAUT_MAX_GENUS", "13")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn smooth_mode_rejected_where_undefined() {
    assert_eq!(code(&wtaut(&["hilbert", "--genus", "2", "--max-degree", "3", "--mode", "smooth"])), 2);
    assert_eq!(code(&wtaut(&["relations", "--genus", "2", "--max-weight", "3", "--mode", "smooth"])), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["class", "--genus", "3"];
    let a = json(&wtaut(&args));
    let b = json(&wtaut(&args));
    assert_eq!(a["payload"], b["payload"]);
    assert_eq!(a["config"], b["config"]);
}

#[test]
fn ranges_emit_an_array() {
    let v = json(&wtaut(&["semigroups", "--genus", "1..3"]));
    let genera: Vec<u64> = v.as_array().unwrap().iter().map(|e| e["payload"]["genus"].as_u64().unwrap()).collect();
    assert_eq!(genera, vec![1, 2, 3]);
}

#[test]
fn output_files_per_genus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = wtaut(&["semigroups", "--genus", "1..3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    for g in 1..=3 {
        let file = dir.path().join(format!("out-g{g}.json"));
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
        assert_eq!(v["payload"]["genus"], g);
    }
    assert!(!Path::new(&path).exists());
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# defaults\ngenus = 2\nformat = csv\nmax_degree = 3\n").unwrap();
    let conf = path.to_str().unwrap();
    let csv = stdout(&wtaut(&["hilbert", "--config", conf]));
    assert_eq!(csv.lines().count(), 1 + 4);
    let v = json(&wtaut(&["hilbert", "--config", conf, "--format", "json", "--genus", "1"]));
    assert_eq!(v["payload"]["genus"], 1);
}

#[test]
fn smooth_power_sums() {
    let v = json(&wtaut(&["psum", "--genus", "2", "--degree", "1", "--mode", "smooth"]));
    let warnings = v["warnings"].as_array().unwrap();
    assert!(!warnings.is_empty());
    let out = wtaut(&["psum", "--genus", "2", "--degree", "2", "--mode", "smooth", "--format", "csv"]);
    let plus = wtaut(&["psum", "--genus", "2", "--degree", "2", "--mode", "smooth", "--paper-sign", "--format", "csv"]);
    assert_ne!(stdout(&out), stdout(&plus));
}

#[test]
fn schur_eval_hook_product() {
    // s*_{(2,1)}(2,1,0) = product of hook lengths 3·1·1
    let v = json(&wtaut(&["schur-eval", "--partition", "2,1", "--args", "2,1,0"]));
    assert_eq!(poly(&v["payload"]["value"]), wtaut::MultiPoly::from_int(3));
}
