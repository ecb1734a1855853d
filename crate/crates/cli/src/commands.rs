//! Subcommand handlers. Each returns the JSON payload together with its
//! text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use ribbon_core::cone::{self, balanced_check, fully_balanced, Multicollection};
use ribbon_core::json;
use ribbon_core::ops::{equivalence_class, equivalent, irreducible_factorization};
use ribbon_core::qsym::{self, Basis, QsymExpr};
use ribbon_core::rational;
use ribbon_core::sym::{ribbon_in_h, ribbon_shape, schur_extract, skew_schur_in_f_bounded, SkewShape};
use ribbon_core::verify::{self, Suite};
use ribbon_core::{partitions, perm, Composition, Error, Partition, Rational};
use serde_json::{json, Map, Value};

use crate::{CliError, Output, QsymBasis, RibbonBasis, SkewBasis, SuiteArg};

type Result<T> = std::result::Result<T, CliError>;

fn parse_comp(s: &str) -> Result<Composition> {
    Ok(Composition::parse_flexible(s)?)
}

fn bound(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::ResourceBound { what, got, limit }.into());
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Io(path.into(), e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?;
    }
    serde_json::from_str(&text).map_err(|e| CliError::Json(path.into(), e))
}

fn schur_text(coeffs: &BTreeMap<Partition, Rational>) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs.iter().rev().map(|(l, c)| format!("{}*s[{l}]", rational::to_text(c))).collect::<Vec<_>>().join(" + ")
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn factorization_payload(beta: &Composition) -> (Value, String) {
    let f = irreducible_factorization(beta);
    let class = equivalence_class(beta);
    let mut text = String::new();
    writeln!(text, "input: {beta}").unwrap();
    writeln!(text, "factors: {}", join(f.factors().iter().map(|c| format!("({c})")), " o ")).unwrap();
    writeln!(text, "symmetric: {}", join(f.symmetric_flags(), " ")).unwrap();
    writeln!(text, "class size: {}", class.len()).unwrap();
    (json::factorization_to_json(beta, &f, &class), text)
}

pub fn factor(comp: &str) -> Result<Output> {
    let (v, text) = factorization_payload(&parse_comp(comp)?);
    Ok(Output::new(v, text))
}

pub fn class(comp: &str) -> Result<Output> {
    let beta = parse_comp(comp)?;
    let (v, _) = factorization_payload(&beta);
    let text = equivalence_class(&beta).iter().map(|c| format!("{c}\n")).collect();
    Ok(Output::new(v, text))
}

pub fn equiv(left: &str, right: &str) -> Result<Output> {
    let (a, b) = (parse_comp(left)?, parse_comp(right)?);
    let same = equivalent(&a, &b);
    let v = json!({
        "equivalent": same,
        "left": factorization_payload(&a).0,
        "right": factorization_payload(&b).0,
    });
    Ok(Output::new(v, format!("{same}\n")))
}

pub fn ribbon(comp: &str, basis: RibbonBasis, max_n: usize) -> Result<Output> {
    let beta = parse_comp(comp)?;
    bound("n", beta.size(), max_n)?;
    Ok(match basis {
        RibbonBasis::H => {
            let e = ribbon_in_h(&beta);
            Output::new(json::sym_h_to_json(&e), format!("{e}\n"))
        }
        RibbonBasis::F => {
            let e = skew_schur_in_f_bounded(&ribbon_shape(&beta), max_n)?;
            Output::new(json::qsym_to_json(&e), format!("{e}\n"))
        }
        RibbonBasis::S => {
            let s = schur_extract(&ribbon_in_h(&beta).to_qsym())?;
            Output::new(json::schur_to_json(beta.size(), &s), format!("{}\n", schur_text(&s)))
        }
    })
}

pub fn skew(shape: &str, basis: SkewBasis, max_cells: usize) -> Result<Output> {
    let shape = SkewShape::parse(shape)?;
    let f = skew_schur_in_f_bounded(&shape, max_cells)?;
    Ok(match basis {
        SkewBasis::F => Output::new(json::qsym_to_json(&f), format!("{f}\n")),
        SkewBasis::S => {
            let s = schur_extract(&f)?;
            Output::new(json::schur_to_json(shape.cells(), &s), format!("{}\n", schur_text(&s)))
        }
    })
}

pub fn lr(comp: &str, max_n: usize) -> Result<Output> {
    let beta = parse_comp(comp)?;
    bound("n", beta.size(), max_n)?;
    let shape = ribbon_shape(&beta);
    let coeffs: BTreeMap<Partition, u64> = schur_extract(&ribbon_in_h(&beta).to_qsym())?
        .into_iter()
        .map(|(nu, c)| {
            let k = rational::is_nonnegative_integer(&c).then(|| c.to_integer().try_into().ok()).flatten();
            k.map(|k| (nu.clone(), k))
                .ok_or_else(|| Error::NotSymmetric(format!("coefficient {c} at {nu} is not a count")))
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut text = format!("shape: {shape}\n");
    for (nu, k) in coeffs.iter().rev() {
        writeln!(text, "{nu}: {k}").unwrap();
    }
    let v = json!({
        "input": beta.to_text(),
        "shape": shape.to_string(),
        "coefficients": json::partition_counts_to_json(&coeffs),
    });
    Ok(Output::new(v, text))
}

fn load_qsym(path: &Path) -> Result<QsymExpr> {
    Ok(json::qsym_from_json(&read_json(path)?)?)
}

pub fn qsym_convert(path: &Path, to: QsymBasis) -> Result<Output> {
    let basis = match to {
        QsymBasis::M => Basis::M,
        QsymBasis::F => Basis::F,
    };
    let e = load_qsym(path)?.to_basis(basis);
    Ok(Output::new(json::qsym_to_json(&e), format!("{e}\n")))
}

pub fn qsym_product(left: &Path, right: &Path) -> Result<Output> {
    let e = qsym::product(&load_qsym(left)?, &load_qsym(right)?);
    Ok(Output::new(json::qsym_to_json(&e), format!("{e}\n")))
}

pub fn qsym_symmetric(path: &Path) -> Result<Output> {
    let e = load_qsym(path)?;
    if !e.is_symmetric() {
        return Ok(Output::new(json!({ "symmetric": false, "schur": null }), "not symmetric\n".into()));
    }
    let s = schur_extract(&e)?;
    let v = json!({ "symmetric": true, "schur": json::schur_to_json(e.degree(), &s) });
    Ok(Output::new(v, format!("{}\n", schur_text(&s))))
}

pub fn descents_matrix(n: usize, max_n: usize, workers: usize) -> Result<Output> {
    let m = perm::descent_pair_matrix_bounded(n, workers, max_n)?;
    let all = ribbon_core::compositions(n);
    let mut text = String::new();
    for alpha in &all {
        let row = all.iter().map(|beta| m.get(alpha, beta).to_string()).collect::<Vec<_>>().join(" ");
        writeln!(text, "{alpha}: {row}").unwrap();
    }
    Ok(Output::new(json::descent_matrix_to_json(&m), text))
}

pub fn cone_rays(n: usize, max_n: usize) -> Result<Output> {
    let rays = cone::extreme_rays_bounded(n, max_n)?;
    let extra = rays.iter().filter(|r| r.as_schur().is_none()).count();
    let mut text = format!("{} extreme rays, {extra} not Schur\n", rays.len());
    for r in &rays {
        writeln!(text, "{}  =  {}", r.describe(), r.fundamental()).unwrap();
    }
    Ok(Output::new(json::rays_to_json(&rays), text))
}

pub fn cone_facets(n: usize, max_n: usize) -> Result<Output> {
    let report = cone::facet_report_bounded(n, max_n)?;
    let mut text = format!(
        "{} inequality classes in dimension {}, {} redundant: {}\n",
        report.class_count(),
        report.dimension,
        report.redundant_count(),
        report.status()
    );
    for e in &report.entries {
        writeln!(
            text,
            "{} (class of {}): {}",
            e.representative,
            e.class_size,
            if e.irredundant { "facet" } else { "redundant" }
        )
        .unwrap();
    }
    let disagreements = report.disagreements();
    if !disagreements.is_empty() {
        writeln!(text, "criteria disagree at {}", join(disagreements, " ")).unwrap();
    }
    Ok(Output::new(json::facet_report_to_json(&report), text))
}

pub fn cone_balanced(path: &Path) -> Result<Output> {
    let mc: Multicollection = json::multicollection_from_json(&read_json(path)?)?;
    let mut kappa = Map::new();
    let mut text = String::new();
    for lambda in &partitions(mc.n() + 1) {
        let k = balanced_check(&mc, lambda)?;
        let shown = k.as_ref().map_or("unbalanced".to_string(), rational::to_text);
        writeln!(text, "{lambda}: {shown}").unwrap();
        kappa.insert(lambda.to_text(), k.map_or(Value::Null, |k| Value::String(rational::to_text(&k))));
    }
    let fully = fully_balanced(&mc)?;
    let e = mc.to_qsym();
    let symmetric = e.is_symmetric();
    let f_nonnegative = e.terms().all(|(_, c)| *c >= rational::int(0));
    text.insert_str(0, &format!("fully balanced: {fully}\nsymmetric: {symmetric}\n"));
    let v = json!({
        "n": mc.n(),
        "fully_balanced": fully,
        "symmetric": symmetric,
        "f_nonnegative": f_nonnegative,
        "kappa": kappa,
    });
    Ok(Output::new(v, text))
}

pub fn verify(suite: SuiteArg, n_max: usize, workers: usize) -> Result<Output> {
    let suite = match suite {
        SuiteArg::Equivalence => Suite::Equivalence,
        SuiteArg::Ribbon => Suite::Ribbon,
        SuiteArg::Descents => Suite::Descents,
        SuiteArg::Cone => Suite::Cone,
        SuiteArg::All => Suite::All,
    };
    let reports = verify::run(suite, n_max, workers)?;
    let passed = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(text, "{mark} {}/{} (n <= {}): {}", r.suite, c.name, r.n_max, c.detail).unwrap();
            if let Some(ce) = &c.counterexample {
                writeln!(text, "  counterexample: {ce}").unwrap();
            }
        }
    }
    let v = json!({
        "passed": passed,
        "suites": reports.iter().map(json::suite_report_to_json).collect::<Vec<_>>(),
    });
    Ok(Output { json: v, text, ok: passed })
}
