//! Shared helpers: running the binary and a validator for the subset of
//! JSON Schema used by the shipped schemas.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use regex::Regex;
use serde_json::Value;

pub fn ribbon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbon")).args(args).output().expect("binary runs")
}

pub fn ribbon_json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = ribbon(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout of {args:?} is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exited normally"), v)
}

pub fn schema_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"))
}

pub fn load_schema(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(schema_path(name)).expect("schema exists")).expect("schema is JSON")
}

/// Violations of `schema` by `v`, as JSON-pointer-like paths with reasons.
pub fn validate(schema: &Value, v: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    check(schema, v, "", &mut errors);
    errors
}

const KEYWORDS: &[&str] = &[
    "$schema",
    "$id",
    "title",
    "type",
    "properties",
    "required",
    "additionalProperties",
    "patternProperties",
    "items",
    "enum",
    "const",
    "pattern",
    "minimum",
    "anyOf",
];

fn check(schema: &Value, v: &Value, at: &str, errors: &mut Vec<String>) {
    let s = schema.as_object().expect("schemas are objects");
    for key in s.keys() {
        assert!(KEYWORDS.contains(&key.as_str()), "validator does not support keyword {key}");
    }
    if let Some(t) = s.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            other => panic!("unsupported type {other}"),
        };
        if !ok {
            errors.push(format!("{at}: expected {t}, found {v}"));
            return;
        }
    }
    if let Some(options) = s.get("enum").and_then(Value::as_array) {
        if !options.contains(v) {
            errors.push(format!("{at}: {v} not in {options:?}"));
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            errors.push(format!("{at}: expected {c}, found {v}"));
        }
    }
    if let (Some(p), Some(text)) = (s.get("pattern").and_then(Value::as_str), v.as_str()) {
        if !Regex::new(p).unwrap().is_match(text) {
            errors.push(format!("{at}: {text:?} does not match {p}"));
        }
    }
    if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < min {
            errors.push(format!("{at}: {x} < {min}"));
        }
    }
    if let Some(branches) = s.get("anyOf").and_then(Value::as_array) {
        if !branches.iter().any(|b| validate(b, v).is_empty()) {
            errors.push(format!("{at}: no anyOf branch matches {v}"));
        }
    }
    if let Some(arr) = v.as_array() {
        if let Some(items) = s.get("items") {
            for (i, x) in arr.iter().enumerate() {
                check(items, x, &format!("{at}/{i}"), errors);
            }
        }
    }
    if let Some(obj) = v.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        let patterns: Vec<(Regex, &Value)> = s
            .get("patternProperties")
            .and_then(Value::as_object)
            .map(|m| m.iter().map(|(p, sub)| (Regex::new(p).unwrap(), sub)).collect())
            .unwrap_or_default();
        for req in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            let key = req.as_str().unwrap();
            if !obj.contains_key(key) {
                errors.push(format!("{at}: missing required {key}"));
            }
        }
        for (key, x) in obj {
            let path = format!("{at}/{key}");
            let mut matched = false;
            if let Some(sub) = props.and_then(|p| p.get(key)) {
                matched = true;
                check(sub, x, &path, errors);
            }
            for (re, sub) in &patterns {
                if re.is_match(key) {
                    matched = true;
                    check(sub, x, &path, errors);
                }
            }
            if !matched && s.get("additionalProperties") == Some(&Value::Bool(false)) {
                errors.push(format!("{path}: unexpected property"));
            }
        }
    }
}
