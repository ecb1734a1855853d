//! The cone `K_n` of symmetric functions of degree `n` with nonnegative
//! `F`-expansion, in Schur coordinates `c_λ`.
//!
//! `K_n` is cut out by one inequality `Σ_λ c_λ [s_λ]_{F_β} ≥ 0` per
//! equivalence class of compositions `β ⊨ n`.

pub mod balanced;
mod dd;
pub mod linalg;
pub mod simplex;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use balanced::{balanced_check, f_lambda, fully_balanced, profile, Multicollection};

use crate::composition::{compositions, partitions, Composition, Partition};
use crate::error::{Error, Result};
use crate::qsym::{Basis, QsymExpr};
use crate::rational::{self, Rational};
use crate::sym::schur_in_f;

/// Default bound on `n` for [`ray_matrix`].
pub const RAY_MATRIX_LIMIT: usize = 8;
/// Default bound on `n` for [`extreme_rays`] and [`facet_report`].
pub const EXTREME_RAYS_LIMIT: usize = 6;
/// Default bound on `n` for the facet-intersection cross-check.
pub const BRUTE_FORCE_LIMIT: usize = 5;
/// Default bound on `|α|` for [`is_extreme_vector`].
pub const EXTREME_VECTOR_LIMIT: usize = 8;

/// The matrix `[s_λ]_{F_β}`: rows are partitions in descending lex order,
/// columns compositions in lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayMatrix {
    n: usize,
    partitions: Vec<Partition>,
    compositions: Vec<Composition>,
    entries: Vec<Vec<u64>>,
}

impl RayMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    fn column_index(&self, beta: &Composition) -> usize {
        self.compositions.binary_search(beta).expect("composition of n")
    }

    pub fn entry(&self, lambda: &Partition, beta: &Composition) -> u64 {
        let i = self.partitions.iter().position(|p| p == lambda).expect("partition of n");
        self.entries[i][self.column_index(beta)]
    }

    pub fn row(&self, lambda: &Partition) -> &[u64] {
        let i = self.partitions.iter().position(|p| p == lambda).expect("partition of n");
        &self.entries[i]
    }

    /// The inequality for `β` in Schur coordinates.
    pub fn column(&self, beta: &Composition) -> Vec<u64> {
        let j = self.column_index(beta);
        self.entries.iter().map(|row| row[j]).collect()
    }
}

pub fn ray_matrix(n: usize) -> Result<RayMatrix> {
    ray_matrix_bounded(n, RAY_MATRIX_LIMIT)
}

pub fn ray_matrix_bounded(n: usize, limit: usize) -> Result<RayMatrix> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    Error::check_bound("n", n, limit)?;
    let parts = partitions(n);
    let comps = compositions(n);
    let entries = parts
        .iter()
        .map(|lambda| {
            let f = schur_in_f(lambda);
            comps
                .iter()
                .map(|beta| {
                    f.coeff(beta).to_integer().try_into().expect("tableau counts are small nonnegative integers")
                })
                .collect()
        })
        .collect();
    Ok(RayMatrix { n, partitions: parts, compositions: comps, entries })
}

/// `v_β`: the multiplicity of each `λ ⊢ n` in `M(β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeVector {
    composition: Composition,
    // indexed like partitions(n)
    values: Vec<u64>,
}

impl ConeVector {
    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    /// Entries in descending lex order of partitions.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Non-zero entries in descending lex order of partitions.
    pub fn support(&self) -> Vec<(Partition, u64)> {
        partitions(self.composition.size())
            .into_iter()
            .zip(self.values.iter().copied())
            .filter(|&(_, v)| v > 0)
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

pub fn cone_vector(beta: &Composition) -> ConeVector {
    let m = beta.coarsening_multiset();
    let values = partitions(beta.size()).iter().map(|l| m.multiplicity(l)).collect();
    ConeVector { composition: beta.clone(), values }
}

/// One inequality of `K_n`, shared by a whole equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityClass {
    pub representative: Composition,
    pub members: Vec<Composition>,
    /// `[s_λ]_{F_β}` for `λ` in descending lex order.
    pub coefficients: Vec<u64>,
}

/// Inequalities deduplicated by `v_β`, ordered by their lex-smallest member.
pub fn inequality_classes(matrix: &RayMatrix) -> Vec<InequalityClass> {
    let mut groups: BTreeMap<Vec<u64>, Vec<Composition>> = BTreeMap::new();
    for beta in matrix.compositions() {
        groups.entry(cone_vector(beta).values).or_default().push(beta.clone());
    }
    let mut classes: Vec<InequalityClass> = groups
        .into_values()
        .map(|members| InequalityClass {
            representative: members[0].clone(),
            coefficients: matrix.column(&members[0]),
            members,
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    classes
}

/// An extreme ray of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    // primitive integer Schur coordinates, indexed like partitions(n)
    coords: Vec<BigInt>,
    partitions: Vec<Partition>,
    fundamental: QsymExpr,
}

impl Ray {
    /// Non-zero Schur coefficients in descending lex order.
    pub fn schur_coeffs(&self) -> Vec<(&Partition, &BigInt)> {
        self.partitions.iter().zip(&self.coords).filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn fundamental(&self) -> &QsymExpr {
        &self.fundamental
    }

    /// `Some(λ)` when the ray is spanned by `s_λ`.
    pub fn as_schur(&self) -> Option<&Partition> {
        match self.schur_coeffs().as_slice() {
            [(lambda, c)] if **c == BigInt::from(1) => Some(lambda),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (i, (lambda, c)) in self.schur_coeffs().into_iter().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            let coeff = if mag == BigInt::from(1) { String::new() } else { mag.to_string() };
            out.push_str(&format!("{sign}{coeff}s[{lambda}]"));
        }
        out
    }
}

fn make_ray(matrix: &RayMatrix, coords: Vec<BigInt>) -> Ray {
    let first = coords.iter().find(|c| !c.is_zero()).expect("rays are nonzero");
    assert!(first.is_positive(), "the leading Schur coefficient of a cone element is positive");
    let mut fundamental = QsymExpr::zero(matrix.n, Basis::F);
    for (lambda, c) in matrix.partitions.iter().zip(&coords) {
        if !c.is_zero() {
            let row = schur_in_f(lambda).scale(&Rational::from_integer(c.clone()));
            fundamental = fundamental.add(&row).expect("same degree and basis");
        }
    }
    Ray { coords, partitions: matrix.partitions.clone(), fundamental }
}

fn inequality_rows(classes: &[InequalityClass]) -> Vec<Vec<BigInt>> {
    classes.iter().map(|c| c.coefficients.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn finish(matrix: &RayMatrix, raw: Vec<Vec<BigInt>>) -> Vec<Ray> {
    let unique: BTreeSet<Vec<BigInt>> = raw.into_iter().collect();
    unique.into_iter().rev().map(|coords| make_ray(matrix, coords)).collect()
}

/// Extreme rays of `K_n` by exact double description, sorted by Schur
/// coordinates in descending lex order.
pub fn extreme_rays(n: usize) -> Result<Vec<Ray>> {
    extreme_rays_bounded(n, EXTREME_RAYS_LIMIT)
}

pub fn extreme_rays_bounded(n: usize, limit: usize) -> Result<Vec<Ray>> {
    Error::check_bound("n", n, limit)?;
    let matrix = ray_matrix_bounded(n, limit.max(RAY_MATRIX_LIMIT))?;
    let rows = inequality_rows(&inequality_classes(&matrix));
    let raw = dd::double_description(&rows, matrix.partitions.len());
    Ok(finish(&matrix, raw))
}

/// Extreme rays by exhaustive facet intersection, an independent check on
/// [`extreme_rays`].
pub fn extreme_rays_brute_force(n: usize) -> Result<Vec<Ray>> {
    Error::check_bound("n", n, BRUTE_FORCE_LIMIT)?;
    let matrix = ray_matrix(n)?;
    let rows = inequality_rows(&inequality_classes(&matrix));
    let d = matrix.partitions.len();
    let raw = if d == 1 { vec![vec![BigInt::from(1)]] } else { dd::facet_intersection(&rows, d) };
    Ok(finish(&matrix, raw))
}

/// Whether `coords` lies in `K_n` and spans an extreme ray there, i.e. the
/// inequalities tight at it have rank `p(n) - 1`.
pub fn is_extreme_ray(matrix: &RayMatrix, coords: &[BigInt]) -> bool {
    let rows = inequality_rows(&inequality_classes(matrix));
    if coords.iter().all(Zero::is_zero) || rows.iter().any(|a| linalg::dot_int(a, coords).is_negative()) {
        return false;
    }
    let tight: Vec<Vec<Rational>> =
        rows.iter().filter(|a| linalg::dot_int(a, coords).is_zero()).map(|a| linalg::to_rational(a)).collect();
    linalg::rank(&tight) + 1 == matrix.partitions.len()
}

fn as_rational_columns(columns: &[Vec<u64>], rows: usize, with_ones: bool) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> =
        (0..rows).map(|i| columns.iter().map(|c| rational::int(c[i] as i64)).collect()).collect();
    if with_ones {
        a.push(vec![rational::int(1); columns.len()]);
    }
    a
}

/// Whether `v_α` is a vertex of the convex hull of all `v_β`, `β ⊨ |α|`.
pub fn is_extreme_vector(alpha: &Composition) -> Result<bool> {
    is_extreme_vector_bounded(alpha, EXTREME_VECTOR_LIMIT)
}

pub fn is_extreme_vector_bounded(alpha: &Composition, limit: usize) -> Result<bool> {
    Error::check_bound("|α|", alpha.size(), limit)?;
    let target = cone_vector(alpha).values;
    let others: BTreeSet<Vec<u64>> =
        compositions(alpha.size()).iter().map(|b| cone_vector(b).values).filter(|v| *v != target).collect();
    if others.is_empty() {
        return Ok(true);
    }
    let columns: Vec<Vec<u64>> = others.into_iter().collect();
    let a = as_rational_columns(&columns, target.len(), true);
    let mut b: Vec<Rational> = target.iter().map(|&x| rational::int(x as i64)).collect();
    b.push(rational::int(1));
    Ok(simplex::feasible(&a, &b).is_none())
}

/// Irredundancy of one inequality class of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetEntry {
    pub representative: Composition,
    pub class_size: usize,
    /// No nonnegative combination of the other inequalities reproduces it.
    pub irredundant: bool,
    /// `v_α` is a vertex of the convex hull of the `v_β`.
    pub vector_extreme: bool,
}

/// Facet check for one `n`; the underlying conjecture stays open, so the
/// report only ever claims verification at the tested size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetReport {
    pub n: usize,
    pub dimension: usize,
    pub entries: Vec<FacetEntry>,
}

impl FacetReport {
    pub fn class_count(&self) -> usize {
        self.entries.len()
    }

    pub fn redundant_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.irredundant).count()
    }

    /// Classes where the two criteria disagree.
    pub fn disagreements(&self) -> Vec<&Composition> {
        self.entries.iter().filter(|e| e.irredundant != e.vector_extreme).map(|e| &e.representative).collect()
    }

    pub fn status(&self) -> String {
        if self.redundant_count() == 0 {
            format!("verified at n = {}", self.n)
        } else {
            format!("counterexample at n = {}", self.n)
        }
    }
}

pub fn facet_report(n: usize) -> Result<FacetReport> {
    facet_report_bounded(n, EXTREME_RAYS_LIMIT)
}

pub fn facet_report_bounded(n: usize, limit: usize) -> Result<FacetReport> {
    Error::check_bound("n", n, limit)?;
    let matrix = ray_matrix_bounded(n, limit.max(RAY_MATRIX_LIMIT))?;
    let classes = inequality_classes(&matrix);
    let d = matrix.partitions.len();
    let mut entries = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let others: Vec<Vec<u64>> =
            classes.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c.coefficients.clone()).collect();
        let irredundant = if others.is_empty() {
            true
        } else {
            let a = as_rational_columns(&others, d, false);
            let b: Vec<Rational> = class.coefficients.iter().map(|&x| rational::int(x as i64)).collect();
            simplex::feasible(&a, &b).is_none()
        };
        entries.push(FacetEntry {
            representative: class.representative.clone(),
            class_size: class.members.len(),
            irredundant,
            vector_extreme: is_extreme_vector_bounded(&class.representative, limit.max(EXTREME_VECTOR_LIMIT))?,
        });
    }
    Ok(FacetReport { n, dimension: d, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{class_representative, equivalent};
    use crate::rational::int;

    fn c(s: &str) -> Composition {
        Composition::parse_flexible(s).unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse_flexible(s).unwrap()
    }

    fn schur_text(ray: &Ray) -> String {
        ray.describe()
    }

    #[test]
    fn ray_matrix_small_cases() {
        let m2 = ray_matrix(2).unwrap();
        assert_eq!(m2.entry(&p("2"), &c("2")), 1);
        assert_eq!(m2.entry(&p("2"), &c("11")), 0);
        assert_eq!(m2.entry(&p("11"), &c("11")), 1);
        assert_eq!(m2.entry(&p("11"), &c("2")), 0);
        let m4 = ray_matrix(4).unwrap();
        let nonzero: Vec<String> =
            m4.compositions().iter().filter(|b| m4.entry(&p("22"), b) > 0).map(|b| b.to_string()).collect();
        assert_eq!(nonzero, ["1,2,1", "2,2"]);
        assert!(m4.compositions().iter().all(|b| m4.entry(&p("22"), b) <= 1));
        assert!(matches!(ray_matrix(9), Err(Error::ResourceBound { .. })));
    }

    #[test]
    fn ray_matrix_is_unitriangular() {
        for n in 1..=7 {
            let m = ray_matrix(n).unwrap();
            for lambda in m.partitions() {
                let as_comp = lambda.to_composition().unwrap();
                assert_eq!(m.entry(lambda, &as_comp), 1);
                let lo = crate::sym::lambda_tilde(lambda).unwrap();
                for beta in m.compositions() {
                    if *beta < lo || *beta > as_comp {
                        assert_eq!(m.entry(lambda, beta), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn cone_vectors() {
        let v = cone_vector(&c("211"));
        assert_eq!(v.support(), [(p("4"), 1), (p("31"), 1), (p("22"), 1), (p("211"), 1)]);
        assert_eq!(cone_vector(&c("121")).support(), [(p("4"), 1), (p("31"), 2), (p("211"), 1)]);
        for n in 1..=9 {
            let all = compositions(n);
            let vectors: Vec<ConeVector> = all.iter().map(cone_vector).collect();
            for (beta, v) in all.iter().zip(&vectors) {
                assert_eq!(v.total(), 1 << (beta.len() - 1));
            }
            // equal vectors ⟺ equal class representatives
            let by_vector: BTreeSet<(Vec<u64>, Composition)> =
                all.iter().zip(&vectors).map(|(b, v)| (v.values.clone(), class_representative(b))).collect();
            let reps: BTreeSet<Composition> = by_vector.iter().map(|(_, r)| r.clone()).collect();
            let vecs: BTreeSet<Vec<u64>> = by_vector.iter().map(|(v, _)| v.clone()).collect();
            assert_eq!(by_vector.len(), reps.len());
            assert_eq!(by_vector.len(), vecs.len());
        }
    }

    #[test]
    fn inequality_classes_match_equivalence() {
        let m = ray_matrix(5).unwrap();
        let classes = inequality_classes(&m);
        for class in &classes {
            for member in &class.members {
                assert!(equivalent(member, &class.representative));
                assert_eq!(m.column(member), class.coefficients);
            }
        }
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 16);
    }

    #[test]
    fn extreme_rays_at_four() {
        let rays = extreme_rays(4).unwrap();
        assert_eq!(rays.len(), 6);
        let extra: Vec<&Ray> = rays.iter().filter(|r| r.as_schur().is_none()).collect();
        assert_eq!(extra.len(), 1);
        assert_eq!(schur_text(extra[0]), "s[3,1]-s[2,2]+s[2,1,1]");
        let f = QsymExpr::from_terms(Basis::F, 4, ["31", "13", "211", "112"].map(|s| (c(s), int(1)))).unwrap();
        assert_eq!(extra[0].fundamental(), &f);
    }

    #[test]
    fn extreme_rays_at_five() {
        let rays = extreme_rays(5).unwrap();
        let mut extra: Vec<String> = rays.iter().filter(|r| r.as_schur().is_none()).map(schur_text).collect();
        extra.sort();
        assert_eq!(extra, ["s[3,1,1]-s[2,2,1]+s[2,1,1,1]", "s[4,1]-s[3,2]+s[3,1,1]"]);
    }

    #[test]
    fn schur_rays_present_and_extreme() {
        for n in 1..=5 {
            let m = ray_matrix(n).unwrap();
            let rays = extreme_rays(n).unwrap();
            let schur: BTreeSet<&Partition> = rays.iter().filter_map(Ray::as_schur).collect();
            assert_eq!(schur.len(), m.partitions().len());
            for ray in &rays {
                assert!(is_extreme_ray(&m, ray.coords()));
                assert!(ray.fundamental().terms().all(|(_, k)| !k.is_negative()));
            }
            assert_eq!(rays, extreme_rays_brute_force(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn sums_of_rays_are_not_extreme() {
        let m = ray_matrix(4).unwrap();
        let rays = extreme_rays(4).unwrap();
        let sum: Vec<BigInt> = rays[0].coords().iter().zip(rays[1].coords()).map(|(a, b)| a + b).collect();
        assert!(!is_extreme_ray(&m, &sum));
        let neg: Vec<BigInt> = rays[0].coords().iter().map(|a| -a).collect();
        assert!(!is_extreme_ray(&m, &neg));
    }

    #[test]
    fn extreme_vectors_small() {
        assert!(is_extreme_vector(&c("2")).unwrap());
        assert!(is_extreme_vector(&c("11")).unwrap());
        for n in 1..=5 {
            for beta in compositions(n) {
                assert!(is_extreme_vector(&beta).unwrap(), "{beta}");
                assert_eq!(is_extreme_vector(&beta).unwrap(), is_extreme_vector(&beta.reverse()).unwrap());
            }
        }
        assert!(matches!(is_extreme_vector(&Composition::ones(9)), Err(Error::ResourceBound { .. })));
    }

    #[test]
    fn facet_report_small() {
        for n in 1..=5 {
            let r = facet_report(n).unwrap();
            assert_eq!(r.dimension, partitions(n).len());
            let classes: BTreeSet<Composition> = compositions(n).iter().map(class_representative).collect();
            assert_eq!(r.class_count(), classes.len());
            assert_eq!(r.redundant_count(), 0);
            assert!(r.disagreements().is_empty());
            assert_eq!(r.status(), format!("verified at n = {n}"));
        }
    }
}
