use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn rookharm(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookharm"))
        .args(args)
        .env("CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn report(cache: &Path, args: &[&str]) -> (Value, i32) {
    let out = rookharm(cache, args);
    let code = out.status.code().expect("exit code");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (doc, code)
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["enumerate", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "enumerate");
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["results"]["count"], 6);
    assert_eq!(doc["results"]["placements"][0], json!([[1, 1]]));
    let (doc, _) = report(dir.path(), &["enumerate", "--n", "1", "--m", "1", "--r", "1"]);
    assert_eq!(doc["results"]["count"], 1);
    let (doc, _) = report(dir.path(), &["enumerate", "--n", "3", "--m", "3", "--r", "0", "--size", "2"]);
    assert_eq!(doc["results"]["count"], 18);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = rookharm(dir.path(), &["enumerate", "--n", "3", "--m", "2", "--r", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r <= min(n, m)"));
    assert!(out.stdout.is_empty());
    assert_eq!(rookharm(dir.path(), &["enumerate", "--n", "2"]).status.code(), Some(2));
    assert_eq!(rookharm(dir.path(), &["frobnicate"]).status.code(), Some(2));
    let out = rookharm(dir.path(), &["basis", "--n", "4", "--m", "4", "--r", "0", "--max-locus", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn basis_reports() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["basis", "--n", "1", "--m", "1", "--r", "0", "--verify"]);
    assert_eq!(code, 0);
    let monos: Vec<&Value> = doc["results"]["basis"].as_array().unwrap().iter().map(|b| &b["monomial"]).collect();
    assert!(monos.contains(&&json!([])) && monos.contains(&&json!([[1, 1, 1]])));
    assert_eq!(doc["results"]["oracle_agrees"], true);

    let (doc, _) = report(dir.path(), &["basis", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(doc["results"]["count"], 6);
    assert_eq!(doc["results"]["degree_histogram"], json!([1, 4, 1]));

    let (doc, code) = report(dir.path(), &["basis", "--n", "8", "--m", "6", "--r", "2", "--placement", "2,3;3,4;5,2;8,5"]);
    assert_eq!(code, 0);
    let entry = &doc["results"]["basis"][0];
    assert_eq!(entry["monomial"], json!([[1, 1, 1], [2, 6, 1], [4, 3, 1], [5, 4, 1], [6, 2, 1]]));
    assert_eq!(entry["shadow_cells"], json!([[1, 1], [2, 6], [4, 3], [5, 4], [6, 2]]));
    assert_eq!(entry["degree"], 5);
}

#[test]
fn hilbert_paths_agree() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["hilbert", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["via_lis"], json!([1, 4, 1]));
    assert_eq!(doc["results"]["oracle"], json!([1, 4, 1]));
    assert_eq!(doc["results"]["agree"], true);
}

#[test]
fn frobenius_tuples() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["frobenius", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["layers"], 3);
    let terms = doc["results"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
    assert_eq!(terms[0], json!({ "degree": 0, "lambda": [2], "mu": [2], "coefficient": 1 }));

    let (doc, code) = report(dir.path(), &["frobenius", "--n", "3", "--m", "3", "--r", "2", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["fixed_point_agrees"], true);
    assert_eq!(doc["results"]["graded_oracle_agrees"], true);
}

#[test]
fn logconcave_series_files() {
    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("single.json");
    std::fs::write(&single, json!({ "n": 2, "m": 2, "terms": [{ "degree": 0, "lambda": [2], "mu": [2], "coefficient": 1 }] }).to_string()).unwrap();
    let (doc, code) = report(dir.path(), &["logconcave", "--series", single.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["entries"][0]["checked_degrees"], json!([]));

    let fake = dir.path().join("fake.json");
    let terms: Vec<Value> = [1, 1, 3]
        .iter()
        .enumerate()
        .map(|(d, c)| json!({ "degree": d, "lambda": [2], "mu": [2], "coefficient": c }))
        .collect();
    std::fs::write(&fake, json!({ "n": 2, "m": 2, "terms": terms }).to_string()).unwrap();
    let (doc, code) = report(dir.path(), &["logconcave", "--series", fake.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v = &doc["results"]["entries"][0]["violations"][0];
    assert_eq!((v["degree"].clone(), v["alpha"].clone(), v["beta"].clone()), (json!(1), json!([2]), json!([2])));

    // a frobenius report is itself a series file
    let saved = dir.path().join("frob.json");
    let out = rookharm(dir.path(), &["frobenius", "--n", "3", "--m", "4", "--r", "1"]);
    std::fs::write(&saved, &out.stdout).unwrap();
    let layers = serde_json::from_slice::<Value>(&out.stdout).unwrap()["results"]["layers"].as_u64().unwrap();
    let (doc, code) = report(dir.path(), &["logconcave", "--series", saved.to_str().unwrap()]);
    assert_eq!(code, 0);
    let internal: Vec<u64> = (1..layers - 1).collect();
    assert_eq!(doc["results"]["entries"][0]["checked_degrees"], json!(internal));
}

#[test]
fn logconcave_rectangle() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["logconcave", "--n", "3", "--m", "4"]);
    assert_eq!(code, 0);
    let expected: usize = (1..=3usize).flat_map(|n| (1..=4usize).map(move |m| n.min(m) + 1)).sum();
    assert_eq!(doc["results"]["triples"], expected);
    assert_eq!(doc["results"]["all_passed"], true);
}

#[test]
fn verify_suites_and_cache_resilience() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["verify", "--suite", "rsk"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["suites"].as_array().unwrap().len(), 1);
    assert_eq!(doc["results"]["suites"][0]["suite"], "rsk");

    let (_, code) = report(dir.path(), &["verify", "--suite", "cache"]);
    assert_eq!(code, 0);
    let file = dir.path().join("chartab-n5.json");
    let good = std::fs::read(&file).unwrap();
    std::fs::write(&file, b"{ truncated").unwrap();
    let out = rookharm(dir.path(), &["verify", "--suite", "cache", "--suite", "logconcave"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rebuilt"));
    assert_eq!(std::fs::read(&file).unwrap(), good);
}

#[test]
fn default_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (doc, code) = report(dir.path(), &["verify"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["results"]["suites"].as_array().unwrap().len(), 11);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["frobenius", "--n", "3", "--m", "2", "--r", "1"];
    let (mut a, _) = report(dir.path(), &args);
    let (mut b, _) = report(dir.path(), &args);
    a["timing"] = Value::Null;
    b["timing"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn definition_order_is_selectable() {
    let dir = tempfile::tempdir().unwrap();
    // (1,2,1) separates the two directions
    let (doc, code) = report(dir.path(), &["basis", "--n", "1", "--m", "2", "--r", "1", "--verify", "--order", "definition"]);
    assert_eq!(code, 1);
    assert_eq!(doc["results"]["oracle_agrees"], false);
    assert_eq!(doc["inputs"]["order"]["direction"], "definition");
}

#[test]
fn table_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = rookharm(dir.path(), &["hilbert", "--n", "2", "--m", "2", "--r", "1", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("via lis:        [1, 4, 1]"));
    assert!(text.contains("agree: true"));
}
