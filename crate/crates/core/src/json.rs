//! JSON forms of the library's values.
//!
//! Term maps are objects keyed by comma-separated compositions or partitions
//! with exact rationals as strings. Composition keys follow lex order and
//! partition keys descending lex order.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::composition::{Composition, Partition, PartitionMultiset};
use crate::compositions;
use crate::cone::{FacetReport, Multicollection, Ray};
use crate::error::{Error, Result};
use crate::ops::Factorization;
use crate::perm::DescentPairMatrix;
use crate::qsym::{Basis, QsymExpr};
use crate::rational::{self, Rational};
use crate::sym::SymHExpr;
use crate::verify::SuiteReport;

pub fn qsym_to_json(e: &QsymExpr) -> Value {
    let terms: Map<String, Value> =
        e.terms().map(|(beta, c)| (beta.to_text(), Value::String(rational::to_text(c)))).collect();
    json!({ "basis": e.basis().name(), "n": e.degree(), "terms": terms })
}

pub fn qsym_from_json(v: &Value) -> Result<QsymExpr> {
    let basis = match v.get("basis").and_then(Value::as_str) {
        Some("M") => Basis::M,
        Some("F") => Basis::F,
        other => return Err(Error::Parse(format!("basis must be \"M\" or \"F\", found {other:?}"))),
    };
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing non-negative integer field \"n\"".into()))? as usize;
    let terms = object_field(v, "terms")?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (key, coeff) in terms {
        let beta = if key.is_empty() { Composition::empty() } else { key.parse::<Composition>()? };
        parsed.push((beta, rational_value(coeff)?));
    }
    QsymExpr::from_terms(basis, n, parsed)
}

pub fn sym_h_to_json(e: &SymHExpr) -> Value {
    let terms: Map<String, Value> =
        e.terms().map(|(l, c)| (l.to_text(), Value::String(rational::to_text(c)))).collect();
    json!({ "basis": "h", "n": e.degree(), "terms": terms })
}

pub fn schur_to_json(n: usize, coeffs: &BTreeMap<Partition, Rational>) -> Value {
    let terms: Map<String, Value> =
        coeffs.iter().rev().map(|(l, c)| (l.to_text(), Value::String(rational::to_text(c)))).collect();
    json!({ "basis": "s", "n": n, "terms": terms })
}

/// Integer-valued partition map, e.g. Littlewood–Richardson coefficients.
pub fn partition_counts_to_json(counts: &BTreeMap<Partition, u64>) -> Value {
    Value::Object(counts.iter().rev().map(|(l, &k)| (l.to_text(), json!(k))).collect())
}

pub fn partition_multiset_to_json(m: &PartitionMultiset) -> Value {
    Value::Object(m.iter().map(|(l, k)| (l.to_text(), json!(k))).collect())
}

pub fn factorization_to_json(input: &Composition, f: &Factorization, class: &[Composition]) -> Value {
    json!({
        "input": input.to_text(),
        "factors": f.factors().iter().map(Composition::to_text).collect::<Vec<_>>(),
        "symmetric_flags": f.symmetric_flags(),
        "class": class.iter().map(Composition::to_text).collect::<Vec<_>>(),
        "class_size": class.len(),
    })
}

fn subset_key(s: &[usize]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn multicollection_to_json(mc: &Multicollection) -> Value {
    let weights: Map<String, Value> =
        mc.weights().map(|(s, k)| (subset_key(s), Value::String(rational::to_text(k)))).collect();
    json!({ "n": mc.n(), "weights": weights })
}

pub fn multicollection_from_json(v: &Value) -> Result<Multicollection> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing non-negative integer field \"n\"".into()))? as usize;
    let mut mc = Multicollection::new(n);
    for (key, k) in object_field(v, "weights")? {
        let subset = if key.trim().is_empty() {
            Vec::new()
        } else {
            key.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid subset key {key:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        mc.add(subset, rational_value(k)?)?;
    }
    Ok(mc)
}

pub fn ray_to_json(ray: &Ray) -> Value {
    let schur: Map<String, Value> =
        ray.schur_coeffs().into_iter().map(|(l, c)| (l.to_text(), Value::String(c.to_string()))).collect();
    let fundamental: Map<String, Value> =
        ray.fundamental().terms().map(|(beta, c)| (beta.to_text(), Value::String(rational::to_text(c)))).collect();
    json!({ "schur": schur, "fundamental": fundamental })
}

pub fn rays_to_json(rays: &[Ray]) -> Value {
    Value::Array(rays.iter().map(ray_to_json).collect())
}

/// Non-zero entries only; rows and columns in lex order.
pub fn descent_matrix_to_json(m: &DescentPairMatrix) -> Value {
    let all = compositions(m.n());
    let mut rows = Map::new();
    for alpha in &all {
        let row: Map<String, Value> = all
            .iter()
            .filter_map(|beta| {
                let k = m.get(alpha, beta);
                (k > 0).then(|| (beta.to_text(), json!(k)))
            })
            .collect();
        rows.insert(alpha.to_text(), Value::Object(row));
    }
    json!({ "n": m.n(), "total": m.total(), "matrix": rows })
}

pub fn facet_report_to_json(r: &FacetReport) -> Value {
    let classes: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "representative": e.representative.to_text(),
                "class_size": e.class_size,
                "irredundant": e.irredundant,
                "vector_extreme": e.vector_extreme,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "dimension": r.dimension,
        "class_count": r.class_count(),
        "redundant_count": r.redundant_count(),
        "criteria_agree": r.disagreements().is_empty(),
        "status": r.status(),
        "classes": classes,
    })
}

pub fn suite_report_to_json(r: &SuiteReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut obj = json!({ "name": c.name, "passed": c.passed, "detail": c.detail });
            if let Some(ce) = &c.counterexample {
                obj["counterexample"] = Value::String(ce.clone());
            }
            obj
        })
        .collect();
    json!({ "suite": r.suite, "n_max": r.n_max, "passed": r.passed(), "checks": checks })
}

pub fn error_to_json(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

fn object_field<'a>(v: &'a Value, name: &str) -> Result<&'a Map<String, Value>> {
    v.get(name).and_then(Value::as_object).ok_or_else(|| Error::Parse(format!("missing object field {name:?}")))
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        _ => Err(Error::Parse(format!("coefficient {v} is not an integer or \"p/q\" string"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{equivalence_class, irreducible_factorization};
    use crate::rational::int;

    fn c(s: &str) -> Composition {
        Composition::parse_flexible(s).unwrap()
    }

    #[test]
    fn qsym_round_trip_and_key_order() {
        let e = QsymExpr::from_terms(
            Basis::F,
            4,
            [(c("22"), int(1)), (c("121"), Rational::new(3.into(), 2.into())), (c("13"), int(-2))],
        )
        .unwrap();
        let v = qsym_to_json(&e);
        assert_eq!(v.to_string(), r#"{"basis":"F","n":4,"terms":{"1,2,1":"3/2","1,3":"-2","2,2":"1"}}"#);
        assert_eq!(qsym_from_json(&v).unwrap(), e);
        let documented: Value = serde_json::from_str(r#"{"basis":"F","n":4,"terms":{"2,2":"1","1,2,1":"1"}}"#).unwrap();
        assert_eq!(qsym_from_json(&documented).unwrap().len(), 2);
        let bad: Value = serde_json::from_str(r#"{"basis":"F","n":3,"terms":{"2,2":"1"}}"#).unwrap();
        assert!(qsym_from_json(&bad).is_err());
    }

    #[test]
    fn multiset_and_factorization_forms() {
        let m = c("2212").coarsening_multiset();
        let v = partition_multiset_to_json(&m);
        let keys: Vec<Partition> = v.as_object().unwrap().keys().map(|k| k.parse().unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(keys[0].to_text(), "7");
        let beta = c("12132");
        let f = irreducible_factorization(&beta);
        let v = factorization_to_json(&beta, &f, &equivalence_class(&beta));
        assert_eq!(v["factors"], json!(["1,2", "1,2"]));
        assert_eq!(v["class_size"], json!(4));
    }

    #[test]
    fn multicollection_round_trip() {
        let v: Value = serde_json::from_str(r#"{"n":5,"weights":{"1,3":"1","2,4":"2","":"-1/2"}}"#).unwrap();
        let mc = multicollection_from_json(&v).unwrap();
        assert_eq!(mc.weights().count(), 3);
        assert_eq!(multicollection_from_json(&multicollection_to_json(&mc)).unwrap(), mc);
        let bad: Value = serde_json::from_str(r#"{"n":2,"weights":{"3":"1"}}"#).unwrap();
        assert!(multicollection_from_json(&bad).is_err());
    }
}
