mod support;

use std::io::Write;

use serde_json::{json, Value};
use support::{ribbon, ribbon_json};

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn factor_of_12132() {
    let (code, v) = ribbon_json(&["factor", "12132"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["factors"]), ["1,2", "1,2"]);
    assert_eq!(strings(&v["class"]), ["1,2,1,3,2", "1,3,2,1,2", "2,1,2,3,1", "2,3,1,2,1"]);
    assert_eq!(v["class_size"], 4);
}

#[test]
fn factor_of_longer_example() {
    let (code, v) = ribbon_json(&["factor", "132121332"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["factors"]), ["2,1,3", "1,2"]);
    let text = String::from_utf8(ribbon(&["factor", "1,3,2,1,2,1,3,3,2"]).stdout).unwrap();
    assert!(text.contains("factors: (2,1,3) o (1,2)"), "{text}");
}

#[test]
fn class_lists_members() {
    let out = ribbon(&["class", "12132"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,2,1,3,2\n1,3,2,1,2\n2,1,2,3,1\n2,3,1,2,1\n");
}

#[test]
fn equiv_answers() {
    assert_eq!(ribbon(&["equiv", "211", "112"]).stdout, b"true\n");
    assert_eq!(ribbon(&["equiv", "211", "121"]).stdout, b"false\n");
    let (_, v) = ribbon_json(&["equiv", "12132", "2,3,1,2,1"]);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["left"]["class"], v["right"]["class"]);
}

#[test]
fn ribbon_and_skew_expansions() {
    let (_, s22) = ribbon_json(&["skew", "22"]);
    assert_eq!(s22, json!({ "basis": "F", "n": 4, "terms": { "1,2,1": "1", "2,2": "1" } }));
    let (_, h) = ribbon_json(&["ribbon", "21"]);
    assert_eq!(h, json!({ "basis": "h", "n": 3, "terms": { "2,1": "1", "3": "-1" } }));
    let (_, f) = ribbon_json(&["ribbon", "21", "--basis", "F"]);
    assert_eq!(f["terms"], json!({ "1,2": "1", "2,1": "1" }));
    let (_, s) = ribbon_json(&["ribbon", "21", "--basis", "s"]);
    assert_eq!(s["terms"], json!({ "2,1": "1" }));
    let (_, skew_s) = ribbon_json(&["skew", "4332/221", "--basis", "s"]);
    let (_, ribbon_s) = ribbon_json(&["ribbon", "2212", "--basis", "s"]);
    assert_eq!(skew_s, ribbon_s);
}

#[test]
fn lr_maps_of_equivalent_ribbons_agree() {
    let (_, a) = ribbon_json(&["lr", "12132"]);
    let (_, b) = ribbon_json(&["lr", "13212"]);
    assert_eq!(a["shape"], "5,4,2,2,1/3,1,1");
    assert_eq!(b["shape"], "5,4,4,3,1/3,3,2");
    assert_eq!(a["coefficients"], b["coefficients"]);
    let (_, c) = ribbon_json(&["lr", "211"]);
    let (_, d) = ribbon_json(&["lr", "112"]);
    assert_eq!(c["shape"], "2,2,2/1,1");
    assert_eq!(c["coefficients"], d["coefficients"]);
    // the same coefficients arise from the non-ribbon shape 4331/2221
    let (_, skew) = ribbon_json(&["skew", "4331/2221", "--basis", "s"]);
    let from_skew: serde_json::Map<String, Value> = skew["terms"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(k, x)| (k.clone(), json!(x.as_str().unwrap().parse::<u64>().unwrap())))
        .collect();
    assert_eq!(c["coefficients"], Value::Object(from_skew));
}

#[test]
fn qsym_file_operations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s22.json");
    std::fs::write(&path, r#"{"basis":"F","n":4,"terms":{"2,2":"1","1,2,1":"1"}}"#).unwrap();
    let p = path.to_str().unwrap();
    let (_, m) = ribbon_json(&["qsym", "convert", p, "--to", "M"]);
    assert_eq!(m["basis"], "M");
    assert_eq!(m["terms"], json!({ "1,1,1,1": "2", "1,1,2": "1", "1,2,1": "1", "2,1,1": "1", "2,2": "1" }));
    let (_, sym) = ribbon_json(&["qsym", "symmetric", p]);
    assert_eq!(sym["schur"]["terms"], json!({ "2,2": "1" }));

    let f1 = dir.path().join("f1.json");
    std::fs::write(&f1, r#"{"basis":"F","n":1,"terms":{"1":"1"}}"#).unwrap();
    let f1 = f1.to_str().unwrap();
    let (_, sq) = ribbon_json(&["qsym", "product", f1, f1]);
    assert_eq!(sq["terms"], json!({ "1,1": "1", "2": "1" }));

    let nonsym = dir.path().join("f21.json");
    std::fs::write(&nonsym, r#"{"basis":"F","n":3,"terms":{"2,1":"1"}}"#).unwrap();
    let (_, v) = ribbon_json(&["qsym", "symmetric", nonsym.to_str().unwrap()]);
    assert_eq!(v, json!({ "symmetric": false, "schur": null }));
}

#[test]
fn qsym_reads_stdin() {
    let mut child = std::process::Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(["--json", "qsym", "convert", "-", "--to", "F"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"basis":"M","n":2,"terms":{"1,1":"1"}}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["terms"], json!({ "1,1": "1" }));
}

#[test]
fn descents_matrix_counts_permutations() {
    let (_, v) = ribbon_json(&["descents-matrix", "3"]);
    assert_eq!(v["total"], 6);
    assert_eq!(v["matrix"]["3"], json!({ "3": 1 }));
    assert_eq!(v["matrix"]["1,2"], json!({ "1,2": 1, "2,1": 1 }));
    let sum: u64 = v["matrix"]
        .as_object()
        .unwrap()
        .values()
        .flat_map(|row| row.as_object().unwrap().values().map(|k| k.as_u64().unwrap()))
        .sum();
    assert_eq!(sum, 6);
}

#[test]
fn cone_rays_at_four() {
    let (code, v) = ribbon_json(&["cone", "rays", "4"]);
    assert_eq!(code, 0);
    let rays = v.as_array().unwrap();
    assert_eq!(rays.len(), 6);
    let extra: Vec<&Value> = rays.iter().filter(|r| r["schur"].as_object().unwrap().len() > 1).collect();
    assert_eq!(extra.len(), 1);
    assert_eq!(extra[0]["schur"], json!({ "3,1": "1", "2,2": "-1", "2,1,1": "1" }));
    assert_eq!(extra[0]["fundamental"], json!({ "1,1,2": "1", "1,3": "1", "2,1,1": "1", "3,1": "1" }));
}

#[test]
fn cone_facets_report_status() {
    let (code, v) = ribbon_json(&["cone", "facets", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["redundant_count"], 0);
    assert_eq!(v["criteria_agree"], true);
    assert_eq!(v["status"], "verified at n = 5");
}

#[test]
fn cone_balanced_reads_multicollections() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mc.json");
    // F-expansion of s_22 on [3]: F_22 = {2}, F_121 = {1,3}
    std::fs::write(&path, r#"{"n":3,"weights":{"2":"1","1,3":"1"}}"#).unwrap();
    let (code, v) = ribbon_json(&["cone", "balanced", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["fully_balanced"], true);
    assert_eq!(v["symmetric"], true);
    std::fs::write(&path, r#"{"n":5,"weights":{"1,3":"1","2,4":"2"}}"#).unwrap();
    let (_, v) = ribbon_json(&["cone", "balanced", path.to_str().unwrap()]);
    assert_eq!(v["fully_balanced"], false);
    assert_eq!(v["symmetric"], false);
}

#[test]
fn verify_suites_pass() {
    let (code, v) = ribbon_json(&["verify", "--n", "6", "equivalence"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let out = ribbon(&["verify", "--n", "5", "descents"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    let (code, v) = ribbon_json(&["verify", "--n", "5", "cone"]);
    assert_eq!(code, 0);
    assert!(v["suites"][0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(ribbon(&["factor", "1x2"]).status.code(), Some(2));
    assert_eq!(ribbon(&["factor"]).status.code(), Some(2));
    assert_eq!(ribbon(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ribbon(&["ribbon", "21", "--basis", "q"]).status.code(), Some(2));
    assert_eq!(ribbon(&["cone", "balanced", "/nonexistent/mc.json"]).status.code(), Some(2));
    assert_eq!(ribbon(&["cone", "rays", "7"]).status.code(), Some(3));
    assert_eq!(ribbon(&["cone", "rays", "5", "--max-n", "4"]).status.code(), Some(3));
    assert_eq!(ribbon(&["descents-matrix", "10"]).status.code(), Some(3));
    assert_eq!(ribbon(&["skew", "5431/1", "--max-cells", "8"]).status.code(), Some(3));
    assert_eq!(ribbon(&["verify", "--n", "30", "cone"]).status.code(), Some(3));
    assert_eq!(ribbon(&["--help"]).status.code(), Some(0));

    let (code, v) = ribbon_json(&["ribbon", "1,0,2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "invalid_composition");
    let (code, v) = ribbon_json(&["lr", "2222222"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "resource_bound");
}

#[test]
fn help_documents_limits_and_workers() {
    let top = String::from_utf8(ribbon(&["--help"]).stdout).unwrap();
    assert!(top.contains("RIBBON_WORKERS"));
    assert!(top.contains("Exit status"));
    let rays = String::from_utf8(ribbon(&["cone", "rays", "--help"]).stdout).unwrap();
    assert!(rays.contains("--max-n") && rays.contains("[default: 6]"), "{rays}");
    let dm = String::from_utf8(ribbon(&["descents-matrix", "--help"]).stdout).unwrap();
    assert!(dm.contains("[default: 9]") && dm.contains("RIBBON_WORKERS"), "{dm}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "cone", "rays", "5"][..],
        &["--json", "descents-matrix", "5"],
        &["ribbon", "2212", "--basis", "s"],
        &["--json", "lr", "13212"],
    ] {
        let a = ribbon(args).stdout;
        assert_eq!(a, ribbon(args).stdout, "{args:?}");
    }
    let one = std::process::Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(["--json", "descents-matrix", "6"])
        .env("RIBBON_WORKERS", "1")
        .output()
        .unwrap();
    let many = std::process::Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(["--json", "descents-matrix", "6"])
        .env("RIBBON_WORKERS", "5")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}
