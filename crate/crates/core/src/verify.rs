//! Exhaustive property suites over all compositions up to a size bound.
//!
//! Each check reports pass/fail with the first counterexample found.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::{compositions, partitions, Composition};
use crate::cone::{
    extreme_rays_bounded, extreme_rays_brute_force, facet_report_bounded, fully_balanced, is_extreme_ray,
    ray_matrix_bounded, Multicollection, BRUTE_FORCE_LIMIT,
};
use crate::error::{Error, Result};
use crate::ops::{class_representative, equivalence_class, factorize_with, try_split, PeelOrder};
use crate::perm::{descent_pair_matrix, Permutation, DESCENT_MATRIX_LIMIT};
use crate::qsym::{Basis, QsymExpr};
use crate::rational::{self, Rational};
use crate::sym::{
    jacobi_trudi, ribbon_in_f, ribbon_in_h, ribbon_shape, schur_in_f, verify_plethysm_average_bounded, PLETHYSM_H_LIMIT,
};
use crate::type_profile::TypeProfile;

/// Number of non-Schur extreme rays of `K_n` for `n = 1..=6`.
pub const KNOWN_EXTRA_RAYS: [usize; 6] = [0, 0, 0, 1, 2, 23];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Equivalence,
    Ribbon,
    Descents,
    Cone,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivalence => "equivalence",
            Suite::Ribbon => "ribbon",
            Suite::Descents => "descents",
            Suite::Cone => "cone",
            Suite::All => "all",
        }
    }

    /// Largest supported `n`.
    pub fn limit(self) -> usize {
        match self {
            Suite::Equivalence => 12,
            Suite::Ribbon => 10,
            Suite::Descents => DESCENT_MATRIX_LIMIT,
            Suite::Cone => crate::cone::EXTREME_RAYS_LIMIT,
            Suite::All => usize::MAX,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "equivalence" => Suite::Equivalence,
            "ribbon" => Suite::Ribbon,
            "descents" => Suite::Descents,
            "cone" => Suite::Cone,
            "all" => Suite::All,
            _ => return Err(Error::Usage(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Check {
    fn from_result(name: &str, detail: String, outcome: std::result::Result<(), String>) -> Self {
        Check { name: name.into(), passed: outcome.is_ok(), detail, counterexample: outcome.err() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub n_max: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run `suite` for all sizes up to `n_max`. An explicit suite beyond its
/// limit is a resource error; `all` clips each suite to its own limit.
pub fn run(suite: Suite, n_max: usize, workers: usize) -> Result<Vec<SuiteReport>> {
    if n_max == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    if suite == Suite::All {
        return [Suite::Equivalence, Suite::Ribbon, Suite::Descents, Suite::Cone]
            .into_iter()
            .map(|s| run_one(s, n_max.min(s.limit()), workers))
            .collect();
    }
    Error::check_bound("n", n_max, suite.limit())?;
    Ok(vec![run_one(suite, n_max, workers)?])
}

fn run_one(suite: Suite, n_max: usize, workers: usize) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Equivalence => equivalence_suite(n_max),
        Suite::Ribbon => ribbon_suite(n_max)?,
        Suite::Descents => descents_suite(n_max, workers)?,
        Suite::Cone => cone_suite(n_max)?,
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(SuiteReport { suite: suite.name().into(), n_max, checks })
}

/// Verify that the partitions of `items` induced by `f` and `g` coincide,
/// returning a pair that one key separates and the other does not.
pub fn same_partition<T, A, B>(items: &[T], f: impl Fn(&T) -> A, g: impl Fn(&T) -> B) -> Option<(usize, usize)>
where
    A: Hash + Eq,
    B: Hash + Eq,
{
    let mut by_f: HashMap<A, usize> = HashMap::new();
    let mut by_g: HashMap<B, usize> = HashMap::new();
    for (i, item) in items.iter().enumerate() {
        let fi = *by_f.entry(f(item)).or_insert(i);
        let gi = *by_g.entry(g(item)).or_insert(i);
        if fi != gi {
            return Some((fi.min(gi), i));
        }
    }
    None
}

fn check_all<T>(
    items: impl IntoIterator<Item = T>,
    mut ok: impl FnMut(&T) -> std::result::Result<(), String>,
) -> std::result::Result<(), String> {
    items.into_iter().try_for_each(|x| ok(&x))
}

fn equivalence_suite(n_max: usize) -> Vec<Check> {
    let sizes = 1..=n_max;
    let mut out = Vec::new();

    let outcome = check_all(sizes.clone(), |&n| {
        let all = compositions(n);
        let reps: Vec<Composition> = all.iter().map(class_representative).collect();
        let idx: Vec<usize> = (0..all.len()).collect();
        let by_ms = |&i: &usize| all[i].coarsening_multiset();
        let by_rep = |&i: &usize| reps[i].clone();
        let by_v = |&i: &usize| crate::cone::cone_vector(&all[i]).values().to_vec();
        if let Some((a, b)) = same_partition(&idx, by_ms, by_rep) {
            return Err(format!("M-multiset vs factorization classes disagree on {} and {}", all[a], all[b]));
        }
        if let Some((a, b)) = same_partition(&idx, by_v, by_rep) {
            return Err(format!("v vectors vs factorization classes disagree on {} and {}", all[a], all[b]));
        }
        Ok(())
    });
    out.push(Check::from_result(
        "M(β) = M(γ) ⟺ γ in the reversal class of β ⟺ v_β = v_γ",
        format!("all pairs of compositions of n, 1 ≤ n ≤ {n_max}"),
        outcome,
    ));

    let outcome = check_all(sizes.clone().flat_map(compositions), |beta| {
        let right = factorize_with(beta, PeelOrder::Right);
        let left = factorize_with(beta, PeelOrder::Left);
        if right != left {
            return Err(format!("{beta}: right peel {:?} vs left peel {:?}", right.factors(), left.factors()));
        }
        if right.compose() != *beta {
            return Err(format!("{beta}: factors {:?} do not recompose", right.factors()));
        }
        let class = equivalence_class(beta);
        if class.len() != 1 << right.nonsymmetric_count() {
            return Err(format!(
                "{beta}: class size {} but {} non-palindromic factors",
                class.len(),
                right.nonsymmetric_count()
            ));
        }
        Ok(())
    });
    out.push(Check::from_result(
        "irreducible factorization is unique and the class has size 2^r",
        format!("all compositions of n ≤ {n_max}"),
        outcome,
    ));

    let outcome = check_all(sizes.flat_map(compositions), |beta| {
        let n = beta.size();
        let h = TypeProfile::of(beta);
        for p in (2..n).filter(|p| n % p == 0) {
            let split = try_split(beta, p).map_err(|e| format!("{beta} p={p}: {e}"))?;
            let periodic = h.h_periodic_except_multiples(p);
            if split.is_some() != periodic {
                return Err(format!("{beta} p={p}: split {} but h periodicity {periodic}", split.is_some()));
            }
        }
        Ok(())
    });
    out.push(Check::from_result(
        "β = δ∘ε with |ε| = p ⟺ h(x) = h(x+p) for p ∤ x",
        format!("all compositions of n ≤ {n_max}, all proper divisors p"),
        outcome,
    ));
    out
}

fn ribbon_suite(n_max: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut three_routes = Ok(());
    let mut jt = Ok(());
    let mut h_image = Ok(());
    let mut counts = Ok(());
    for n in 1..=n_max {
        let all = compositions(n);
        let h: Vec<_> = all.iter().map(ribbon_in_h).collect();
        let f: Vec<QsymExpr> = all.iter().map(ribbon_in_f).collect::<Result<_>>()?;
        let reps: Vec<Composition> = all.iter().map(class_representative).collect();
        let idx: Vec<usize> = (0..all.len()).collect();
        let h_key = |&i: &usize| crate::json::sym_h_to_json(&h[i]).to_string();
        let f_key = |&i: &usize| crate::json::qsym_to_json(&f[i]).to_string();
        let rep_key = |&i: &usize| reps[i].clone();
        if three_routes.is_ok() {
            if let Some((a, b)) = same_partition(&idx, h_key, rep_key).or_else(|| same_partition(&idx, f_key, rep_key))
            {
                three_routes = Err(format!("routes disagree on {} and {}", all[a], all[b]));
            }
        }
        if jt.is_ok() {
            if let Some(beta) =
                all.iter().zip(&h).find(|(b, hb)| jacobi_trudi(&ribbon_shape(b)) != **hb).map(|(b, _)| b)
            {
                jt = Err(format!("Jacobi–Trudi differs from the h-expansion at {beta}"));
            }
        }
        if h_image.is_ok() && n <= 7 {
            if let Some(i) = idx.iter().copied().find(|&i| h[i].to_qsym().to_basis(Basis::F) != f[i]) {
                h_image = Err(format!("h-basis image differs from tableaux at {}", all[i]));
            }
        }
        if counts.is_ok() {
            let distinct: std::collections::HashSet<String> = idx.iter().map(h_key).collect();
            let classes: std::collections::HashSet<&Composition> = reps.iter().collect();
            if distinct.len() != classes.len() {
                counts = Err(format!("n={n}: {} ribbons vs {} classes", distinct.len(), classes.len()));
            }
        }
    }
    out.push(Check::from_result(
        "ribbon equality: h-basis, F-basis and factorization routes agree",
        format!("all pairs at n ≤ {n_max}"),
        three_routes,
    ));
    out.push(Check::from_result(
        "Jacobi–Trudi equals the ribbon h-expansion",
        format!("all ribbons at n ≤ {n_max}"),
        jt,
    ));
    out.push(Check::from_result(
        "h-basis image under quasi-shuffles equals the tableau F-expansion",
        format!("all ribbons at n ≤ {}", n_max.min(7)),
        h_image,
    ));
    out.push(Check::from_result("distinct ribbons = equivalence classes", format!("n ≤ {n_max}"), counts));

    let mut pleth = Ok(());
    let mut cases = 0;
    'outer: for size in 1..=n_max {
        for beta in compositions(size) {
            for m in 1..=n_max / size {
                cases += 1;
                if !verify_plethysm_average_bounded(m, &beta, PLETHYSM_H_LIMIT)? {
                    pleth = Err(format!("m={m}, β={beta}"));
                    break 'outer;
                }
            }
        }
    }
    out.push(Check::from_result(
        "Σ_{α⊨m} r_{α∘β} = r_β^m",
        format!("{cases} pairs (m, β) with m·|β| ≤ {n_max}"),
        pleth,
    ));
    Ok(out)
}

fn descents_suite(n_max: usize, workers: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut small: Vec<Permutation> = Vec::new();
    let mut v = vec![1, 2, 3];
    loop {
        small.push(Permutation::new(v.clone())?);
        if !crate::qsym::next_permutation(&mut v) {
            break;
        }
    }
    let mut outcome = Ok(());
    let mut pairs: Vec<(Permutation, Permutation)> =
        small.iter().flat_map(|a| small.iter().map(move |b| (a.clone(), b.clone()))).collect();
    for _ in 0..1000 {
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        pairs.push((random_permutation(&mut rng, a), random_permutation(&mut rng, b)));
    }
    for (s, t) in &pairs {
        if !crate::perm::verify_tensor_descents(s, t) {
            outcome = Err(format!("σ={s}, τ={t}"));
            break;
        }
        if s.tensor(t).star() != s.star().tensor(&t.star()) {
            outcome = Err(format!("(σ⊗τ)* ≠ σ*⊗τ* for σ={s}, τ={t}"));
            break;
        }
    }
    out.push(Check::from_result(
        "d(σ⊗τ) = S(β∘γ) and (σ⊗τ)* = σ*⊗τ*",
        "S_3 × S_3 exhaustively plus 1000 random pairs of size ≤ 5".into(),
        outcome,
    ));

    let mut rows = Ok(());
    let mut entries = Ok(());
    for n in 1..=n_max {
        let m = descent_pair_matrix(n, workers)?;
        let all = compositions(n);
        if m.total() != (1..=n as u64).product::<u64>() {
            rows = Err(format!("n={n}: entries sum to {}", m.total()));
            break;
        }
        let idx: Vec<usize> = (0..all.len()).collect();
        if let Some((a, b)) = same_partition(&idx, |&i| m.row(&all[i]).to_vec(), |&i| all[i].coarsening_multiset()) {
            rows = Err(format!("rows {} and {}", all[a], all[b]));
            break;
        }
        if n <= 7 && entries.is_ok() {
            for beta in &all {
                let r = ribbon_in_f(beta)?;
                if let Some(alpha) = all.iter().find(|a| r.coeff(a) != rational::int(m.get(a, beta) as i64)) {
                    entries = Err(format!("N[{alpha}][{beta}] ≠ [F_{alpha}] r_{beta}"));
                    break;
                }
            }
        }
    }
    out.push(Check::from_result(
        "descent-pair rows agree exactly for equivalent compositions",
        format!("S_n for n ≤ {n_max}"),
        rows,
    ));
    out.push(Check::from_result("N[α][β] = [F_α] r_β", format!("n ≤ {}", n_max.min(7)), entries));
    Ok(out)
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffled identity")
}

/// Random multicollections on `[n]`: a third symmetric (Schur
/// combinations), a third symmetric plus one extra set, a third sparse.
pub fn random_multicollections(n: usize, count: usize, seed: u64) -> Vec<Multicollection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    let schur: Vec<QsymExpr> = partitions(n + 1).iter().map(schur_in_f).collect();
    let random_q =
        |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into());
    (0..count)
        .map(|i| {
            let mut mc = Multicollection::new(n);
            if i % 3 < 2 {
                let mut e = QsymExpr::zero(n + 1, Basis::F);
                for _ in 0..rng.gen_range(1..=3) {
                    let s = &schur[rng.gen_range(0..schur.len())];
                    e = e.add(&s.scale(&random_q(&mut rng))).expect("same degree");
                }
                mc = Multicollection::from_qsym(&e).expect("positive degree");
            }
            if i % 3 > 0 {
                for _ in 0..rng.gen_range(1..=4) {
                    let subset: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
                    mc.add(subset, random_q(&mut rng)).expect("subset of [n]");
                }
            }
            mc
        })
        .collect()
}

fn cone_suite(n_max: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut extras = Vec::new();
    let mut rays_ok = Ok(());
    let mut brute_ok = Ok(());
    let mut facets_ok = Ok(());
    let mut statuses = Vec::new();
    for n in 1..=n_max {
        let matrix = ray_matrix_bounded(n, n.max(crate::cone::RAY_MATRIX_LIMIT))?;
        let rays = extreme_rays_bounded(n, n_max)?;
        let schur = rays.iter().filter(|r| r.as_schur().is_some()).count();
        let extra = rays.len() - schur;
        extras.push(format!("n={n}: {extra}"));
        if rays_ok.is_ok() {
            if schur != matrix.partitions().len() {
                rays_ok = Err(format!("n={n}: {schur} Schur rays of {}", matrix.partitions().len()));
            } else if let Some(r) = rays.iter().find(|r| !is_extreme_ray(&matrix, r.coords())) {
                rays_ok = Err(format!("n={n}: {} is not extreme", r.describe()));
            } else if let Some(r) =
                rays.iter().find(|r| r.fundamental().terms().any(|(_, c)| c < &Rational::from_integer(0.into())))
            {
                rays_ok = Err(format!("n={n}: {} has a negative F-coefficient", r.describe()));
            } else if n <= KNOWN_EXTRA_RAYS.len() && KNOWN_EXTRA_RAYS[n - 1] != extra {
                rays_ok = Err(format!("n={n}: {extra} non-Schur rays, expected {}", KNOWN_EXTRA_RAYS[n - 1]));
            }
        }
        if n <= BRUTE_FORCE_LIMIT && brute_ok.is_ok() && extreme_rays_brute_force(n)? != rays {
            brute_ok = Err(format!("n={n}: double description and facet intersection differ"));
        }
        let report = facet_report_bounded(n, n_max)?;
        statuses.push(report.status());
        if facets_ok.is_ok() {
            if report.redundant_count() > 0 {
                facets_ok = Err(format!("n={n}: {} redundant inequality classes", report.redundant_count()));
            } else if let Some(beta) = report.disagreements().first() {
                facets_ok = Err(format!("n={n}: redundancy and v-vector extremality disagree at {beta}"));
            }
        }
    }
    out.push(Check::from_result(
        "extreme rays: every Schur function, each ray verified extreme and F-positive",
        format!("non-Schur rays {}", extras.join(", ")),
        rays_ok,
    ));
    out.push(Check::from_result(
        "double description agrees with facet intersection",
        format!("n ≤ {}", n_max.min(BRUTE_FORCE_LIMIT)),
        brute_ok,
    ));
    out.push(Check::from_result(
        "facet conjecture: no redundant inequality class (conjecture, checked at these sizes only)",
        format!("status: verified at n ≤ {n_max}; per size: {}", statuses.join("; ")),
        facets_ok,
    ));

    let mut balance = Ok(());
    let mut sym_count = 0;
    let mut total = 0;
    'outer: for n in 1..=n_max {
        for mc in random_multicollections(n, 200, 17) {
            total += 1;
            let symmetric = mc.to_qsym().is_symmetric();
            sym_count += usize::from(symmetric);
            if fully_balanced(&mc)? != symmetric {
                balance = Err(format!("{}", crate::json::multicollection_to_json(&mc)));
                break 'outer;
            }
        }
    }
    out.push(Check::from_result(
        "fully balanced ⟺ symmetric",
        format!("{total} random multicollections on [n], n ≤ {n_max} ({sym_count} symmetric)"),
        balance,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_sizes() {
        for suite in [Suite::Equivalence, Suite::Ribbon, Suite::Descents, Suite::Cone] {
            let reports = run(suite, 4, 2).unwrap();
            for r in &reports {
                for c in &r.checks {
                    assert!(c.passed, "{}: {} {:?}", r.suite, c.name, c.counterexample);
                }
            }
        }
    }

    #[test]
    fn limits_and_parsing() {
        assert!(matches!(run(Suite::Cone, 7, 1), Err(Error::ResourceBound { .. })));
        assert_eq!("ribbon".parse::<Suite>().unwrap(), Suite::Ribbon);
        assert!("bogus".parse::<Suite>().is_err());
        assert_eq!(run(Suite::All, 3, 1).unwrap().len(), 4);
    }

    #[test]
    fn partition_comparison() {
        let items = [1, 2, 3, 4];
        assert_eq!(same_partition(&items, |x| x % 2, |x| x % 2 == 0), None);
        assert_eq!(same_partition(&items, |x| x % 2, |x| *x < 3), Some((0, 1)));
    }

    #[test]
    fn random_multicollections_mix_both_kinds() {
        let mcs = random_multicollections(4, 60, 1);
        let symmetric = mcs.iter().filter(|m| m.to_qsym().is_symmetric()).count();
        assert!((10..60).contains(&symmetric));
    }
}
