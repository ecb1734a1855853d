//! Symmetric functions: the `h` basis, skew and ribbon Schur functions,
//! Jacobi–Trudi, Schur extraction and ribbon Littlewood–Richardson maps.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::composition::{compositions, Composition, DescentSet, Partition};
use crate::error::{Error, Result};
use crate::ops::{circ, concat, equivalent, near_concat};
use crate::qsym::{next_permutation, quasi_shuffle_product, Basis, QsymExpr};
use crate::rational::{self, Rational};

/// Default cell bound for tableau enumeration.
pub const SKEW_CELL_LIMIT: usize = 12;
/// Default `m·|β|` bound for the `h`-basis plethysm check.
pub const PLETHYSM_H_LIMIT: usize = 20;
/// Default `m·|β|` bound for the tableau-based plethysm check.
pub const PLETHYSM_F_LIMIT: usize = 12;

/// A symmetric function of fixed degree in the complete homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymHExpr {
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymHExpr {
    pub fn zero(degree: usize) -> Self {
        SymHExpr { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::h(&Partition::empty())
    }

    /// `h_λ`.
    pub fn h(lambda: &Partition) -> Self {
        let mut e = Self::zero(lambda.size());
        e.terms.insert(lambda.clone(), Rational::one());
        e
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch(lambda.size(), degree));
            }
            e.add_term(lambda, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Non-zero terms in descending lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    /// Number of non-zero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * k);
        }
        out
    }

    /// Product, using `h_λ h_μ = h_{λ ∪ μ}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Image in quasisymmetric functions, via `h_k = Σ_{β ⊨ k} M_β` and the
    /// quasi-shuffle product.
    pub fn to_qsym(&self) -> QsymExpr {
        let mut h_k: HashMap<usize, QsymExpr> = HashMap::new();
        let mut out = QsymExpr::zero(self.degree, Basis::M);
        for (lambda, c) in &self.terms {
            let mut prod = QsymExpr::one(Basis::M);
            for &k in lambda.parts() {
                let hk = h_k.entry(k).or_insert_with(|| {
                    QsymExpr::from_terms(Basis::M, k, compositions(k).into_iter().map(|b| (b, Rational::one())))
                        .expect("compositions of k have size k")
                });
                prod = quasi_shuffle_product(&prod, hk).expect("both factors in the M basis");
            }
            out = out.add(&prod.scale(c)).expect("same degree and basis");
        }
        out
    }
}

impl fmt::Display for SymHExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*h[{}]", rational::to_text(c), lambda)?;
        }
        Ok(())
    }
}

/// A skew diagram `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() || (0..inner.len()).any(|i| inner.part(i) > outer.part(i)) {
            return Err(Error::InvalidShape(format!("{inner} does not fit inside {outer}")));
        }
        if outer.size() == inner.size() {
            return Err(Error::InvalidShape(format!("{outer}/{inner} has no cells")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(lambda: Partition) -> Result<Self> {
        Self::new(lambda, Partition::empty())
    }

    /// Parse `outer/inner` or a bare `outer`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => Self::new(Partition::parse_flexible(o)?, Partition::parse_flexible(i)?),
            None => Self::straight(Partition::parse_flexible(s)?),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Length of row `i` of the diagram (top row is 0).
    pub fn row_length(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A standard filling of a skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: SkewShape,
    // rows[i] lists the entries of row i from left to right
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `i` is a descent when `i + 1` sits in a lower row than `i`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.shape.cells();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        let d = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect();
        DescentSet::new(n, d).expect("descents lie in 1..n")
    }
}

/// Depth-first placement of `1, 2, …` into rows; `visit` receives the row of
/// every entry.
fn walk_tableaux(shape: &SkewShape, visit: &mut impl FnMut(&[usize])) {
    fn rec(shape: &SkewShape, filled: &mut [usize], placed: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if placed.len() == shape.cells() {
            visit(placed);
            return;
        }
        for i in 0..filled.len() {
            if filled[i] == shape.row_length(i) {
                continue;
            }
            let col = shape.inner.part(i) + filled[i];
            if i > 0 && col + 1 > shape.inner.part(i - 1) + filled[i - 1] {
                continue;
            }
            filled[i] += 1;
            placed.push(i);
            rec(shape, filled, placed, visit);
            placed.pop();
            filled[i] -= 1;
        }
    }
    let mut filled = vec![0; shape.rows()];
    rec(shape, &mut filled, &mut Vec::with_capacity(shape.cells()), visit);
}

/// All standard tableaux of `shape`, in depth-first generation order.
pub fn standard_tableaux(shape: &SkewShape) -> Result<Vec<StandardTableau>> {
    Error::check_bound("skew shape cells", shape.cells(), SKEW_CELL_LIMIT)?;
    let mut out = Vec::new();
    walk_tableaux(shape, &mut |rows_of| {
        let mut rows = vec![Vec::new(); shape.rows()];
        for (v, &r) in rows_of.iter().enumerate() {
            rows[r].push(v + 1);
        }
        out.push(StandardTableau { shape: shape.clone(), rows });
    });
    Ok(out)
}

fn skew_schur_unbounded(shape: &SkewShape) -> QsymExpr {
    let n = shape.cells();
    let mut counts: HashMap<u64, u64> = HashMap::new();
    walk_tableaux(shape, &mut |rows_of| {
        let mask = (1..n).filter(|&i| rows_of[i] > rows_of[i - 1]).fold(0u64, |m, i| m | 1 << (i - 1));
        *counts.entry(mask).or_insert(0) += 1;
    });
    QsymExpr::from_terms(
        Basis::F,
        n,
        counts.into_iter().map(|(mask, k)| (Composition::from_descent_mask(mask, n), Rational::from_integer(k.into()))),
    )
    .expect("descent compositions have size n")
}

/// `s_{λ/μ} = Σ_T F_{β(D(T))}` over standard tableaux `T`.
pub fn skew_schur_in_f(shape: &SkewShape) -> Result<QsymExpr> {
    skew_schur_in_f_bounded(shape, SKEW_CELL_LIMIT)
}

pub fn skew_schur_in_f_bounded(shape: &SkewShape, max_cells: usize) -> Result<QsymExpr> {
    Error::check_bound("skew shape cells", shape.cells(), max_cells)?;
    Ok(skew_schur_unbounded(shape))
}

/// `s_λ` in the `F` basis.
pub fn schur_in_f(lambda: &Partition) -> QsymExpr {
    if lambda.is_empty() {
        return QsymExpr::one(Basis::F);
    }
    skew_schur_unbounded(&SkewShape::straight(lambda.clone()).expect("non-empty partition"))
}

/// The ribbon whose rows, read from the bottom, have lengths `β_1, …, β_k`.
pub fn ribbon_shape(beta: &Composition) -> SkewShape {
    let k = beta.len();
    // top row first
    let rows: Vec<usize> = beta.parts().iter().rev().copied().collect();
    let mut outer = vec![0; k];
    let mut suffix = 0;
    for i in (0..k).rev() {
        suffix += rows[i];
        outer[i] = suffix - (k - 1 - i);
    }
    let inner: Vec<usize> = (0..k.saturating_sub(1)).map(|i| outer[i + 1] - 1).filter(|&m| m > 0).collect();
    SkewShape::new(
        Partition::new(outer).expect("ribbon rows are weakly decreasing"),
        Partition::new(inner).expect("ribbon inner rows are weakly decreasing"),
    )
    .expect("ribbon shape is valid")
}

/// `r_α = (-1)^{l(α)} Σ_{β ≥ α} (-1)^{l(β)} h_{λ(β)}`.
pub fn ribbon_in_h(alpha: &Composition) -> SymHExpr {
    if alpha.is_empty() {
        return SymHExpr::one();
    }
    let mut out = SymHExpr::zero(alpha.size());
    for beta in alpha.coarsenings() {
        out.add_term(beta.sort_to_partition(), rational::sign(alpha.len() - beta.len()));
    }
    out
}

/// `r_β` in the `F` basis via tableaux of the ribbon shape.
pub fn ribbon_in_f(beta: &Composition) -> Result<QsymExpr> {
    skew_schur_in_f(&ribbon_shape(beta))
}

/// The two compositions `α·β` and `α⊙β` with `r_α r_β = r_{α·β} + r_{α⊙β}`.
pub fn ribbon_product_terms(alpha: &Composition, beta: &Composition) -> [Composition; 2] {
    [concat(alpha, beta), near_concat(alpha, beta)]
}

/// `r_α r_β` in the `h` basis.
pub fn ribbon_product(alpha: &Composition, beta: &Composition) -> SymHExpr {
    let [a, b] = ribbon_product_terms(alpha, beta);
    ribbon_in_h(&a).add(&ribbon_in_h(&b)).expect("both have degree |α|+|β|")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RibbonRoute {
    /// Compare `h`-basis expansions.
    H,
    /// Compare `F`-basis expansions from tableau enumeration.
    F,
    /// Compare irreducible factorizations up to reversal.
    Factorization,
}

/// Whether `r_β = r_γ`.
pub fn ribbon_equal(beta: &Composition, gamma: &Composition) -> bool {
    ribbon_in_h(beta) == ribbon_in_h(gamma)
}

pub fn ribbon_equal_via(beta: &Composition, gamma: &Composition, route: RibbonRoute) -> Result<bool> {
    Ok(match route {
        RibbonRoute::H => ribbon_equal(beta, gamma),
        RibbonRoute::F => ribbon_in_f(beta)? == ribbon_in_f(gamma)?,
        RibbonRoute::Factorization => equivalent(beta, gamma),
    })
}

/// `det(h_{λ_i - μ_j - i + j})` expanded over permutations, with `h_0 = 1`
/// and `h_k = 0` for `k < 0`.
pub fn jacobi_trudi(shape: &SkewShape) -> SymHExpr {
    let l = shape.outer.len();
    let entry =
        |i: usize, j: usize| -> i64 { shape.outer.part(i) as i64 - shape.inner.part(j) as i64 - i as i64 + j as i64 };
    let mut out = SymHExpr::zero(shape.cells());
    let mut perm: Vec<usize> = (0..l).collect();
    loop {
        let mut parts = Vec::with_capacity(l);
        let mut vanishes = false;
        for (i, &j) in perm.iter().enumerate() {
            match entry(i, j) {
                k if k < 0 => {
                    vanishes = true;
                    break;
                }
                0 => {}
                k => parts.push(k as usize),
            }
        }
        if !vanishes {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let inversions =
                (0..l).flat_map(|a| (a + 1..l).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
            out.add_term(Partition::new(parts).expect("sorted positive parts"), rational::sign(inversions));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// `λ̃ = β([n-1] ∖ S(λ'))`, the lexicographically smallest composition in
/// the support of `s_λ`.
pub fn lambda_tilde(lambda: &Partition) -> Result<Composition> {
    let conj = lambda
        .conjugate()
        .to_composition()
        .ok_or_else(|| Error::InvalidPartition("empty partition has no λ̃".into()))?;
    Ok(conj.descent_set().complement().composition())
}

/// Smallest lexicographic interval containing the support, or `None` for 0.
pub fn spread(e: &QsymExpr) -> Result<Option<(Composition, Composition)>> {
    if e.basis() != Basis::F {
        return Err(Error::BasisMismatch { expected: "F", found: e.basis().name() });
    }
    let mut keys = e.terms().map(|(b, _)| b);
    Ok(keys.next().map(|first| (first.clone(), keys.last().unwrap_or(first).clone())))
}

fn as_partition(beta: &Composition) -> Option<Partition> {
    Partition::new(beta.parts().to_vec()).ok()
}

/// Write a symmetric `F`- or `M`-expansion as `Σ c_λ s_λ`.
///
/// The lex-largest surviving key must be a partition `λ`, whose coefficient
/// is `c_λ` because `s_λ = F_λ + (lex-smaller terms)`.
pub fn schur_extract(e: &QsymExpr) -> Result<BTreeMap<Partition, Rational>> {
    let mut residual = e.to_basis(Basis::F);
    let mut out = BTreeMap::new();
    while let Some((top, c)) = residual.terms().last().map(|(b, c)| (b.clone(), c.clone())) {
        let lambda = as_partition(&top).ok_or_else(|| Error::NotSymmetric(format!("leading term F[{top}]")))?;
        residual = residual.sub(&schur_in_f(&lambda).scale(&c))?;
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Schur expansion of the ribbon `r_β`, i.e. the coefficients
/// `c^λ_{μν}` of the skew shape `λ/μ` of `β`, indexed by `ν`.
pub fn ribbon_lr_coeffs(beta: &Composition) -> Result<BTreeMap<Partition, u64>> {
    schur_extract(&ribbon_in_f(beta)?)?
        .into_iter()
        .map(|(nu, c)| match c.to_integer().to_u64() {
            Some(k) if c.is_integer() => Ok((nu, k)),
            _ => Err(Error::NotSymmetric(format!("non-integral coefficient {c} at {nu}"))),
        })
        .collect()
}

/// Check `Σ_{α ⊨ m} r_{α∘β} = r_β^m` in the `h` basis.
pub fn verify_plethysm_average(m: usize, beta: &Composition) -> Result<bool> {
    verify_plethysm_average_bounded(m, beta, PLETHYSM_H_LIMIT)
}

pub fn verify_plethysm_average_bounded(m: usize, beta: &Composition, limit: usize) -> Result<bool> {
    Error::check_bound("m·|β|", m * beta.size(), limit)?;
    if m == 0 {
        return Err(Error::Usage("m must be positive".into()));
    }
    let mut lhs = SymHExpr::zero(m * beta.size());
    for alpha in compositions(m) {
        lhs = lhs.add(&ribbon_in_h(&circ(&alpha, beta)))?;
    }
    Ok(lhs == ribbon_in_h(beta).pow(m as u32))
}

/// The same identity checked on `F`-expansions from tableaux.
pub fn verify_plethysm_average_f(m: usize, beta: &Composition, limit: usize) -> Result<bool> {
    Error::check_bound("m·|β|", m * beta.size(), limit)?;
    if m == 0 {
        return Err(Error::Usage("m must be positive".into()));
    }
    let mut lhs = QsymExpr::zero(m * beta.size(), Basis::F);
    for alpha in compositions(m) {
        lhs = lhs.add(&skew_schur_unbounded(&ribbon_shape(&circ(&alpha, beta))))?;
    }
    let rb = skew_schur_unbounded(&ribbon_shape(beta)).to_basis(Basis::M);
    let mut rhs = QsymExpr::one(Basis::M);
    for _ in 0..m {
        rhs = quasi_shuffle_product(&rhs, &rb)?;
    }
    Ok(lhs.same_function(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::partitions;
    use crate::ops::class_representative;
    use crate::rational::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn c(s: &str) -> Composition {
        Composition::parse_flexible(s).unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse_flexible(s).unwrap()
    }

    fn hexpr(terms: &[(&str, i64)]) -> SymHExpr {
        let n = p(terms[0].0).size();
        SymHExpr::from_terms(n, terms.iter().map(|(s, k)| (p(s), int(*k)))).unwrap()
    }

    fn fexpr(terms: &[(&str, i64)]) -> QsymExpr {
        let n = c(terms[0].0).size();
        QsymExpr::from_terms(Basis::F, n, terms.iter().map(|(s, k)| (c(s), int(*k)))).unwrap()
    }

    fn subset_comp(n: usize, set: &[usize]) -> Composition {
        DescentSet::new(n, set.to_vec()).unwrap().composition()
    }

    #[test]
    fn ribbon_shapes() {
        assert_eq!(ribbon_shape(&c("2212")).to_string(), "4,3,3,2/2,2,1");
        assert_eq!(ribbon_shape(&c("5")).to_string(), "5");
        assert_eq!(ribbon_shape(&c("1111")).to_string(), "1,1,1,1");
        assert_eq!(ribbon_shape(&c("21")).to_string(), "2,2/1");
        for n in 1..=8 {
            for beta in compositions(n) {
                let shape = ribbon_shape(&beta);
                assert_eq!(shape.cells(), n);
                let rows: Vec<usize> = (0..shape.rows()).rev().map(|i| shape.row_length(i)).collect();
                assert_eq!(rows, beta.parts());
            }
        }
    }

    #[test]
    fn ribbons_in_h() {
        assert_eq!(ribbon_in_h(&c("22")), hexpr(&[("22", 1), ("4", -1)]));
        assert_eq!(ribbon_in_h(&c("12")), hexpr(&[("21", 1), ("3", -1)]));
        assert_eq!(ribbon_in_h(&c("6")), hexpr(&[("6", 1)]));
    }

    #[test]
    fn skew_schur_examples() {
        let s22 = skew_schur_in_f(&SkewShape::parse("22").unwrap()).unwrap();
        assert_eq!(s22, fexpr(&[("22", 1), ("121", 1)]));
        assert_eq!(skew_schur_in_f(&SkewShape::parse("7").unwrap()).unwrap(), fexpr(&[("7", 1)]));
        assert_eq!(ribbon_in_f(&c("21")).unwrap(), fexpr(&[("21", 1), ("12", 1)]));

        let subsets: [(&[usize], i64); 14] = [
            (&[1, 3], 1),
            (&[1, 4], 1),
            (&[2, 3], 1),
            (&[2, 4], 2),
            (&[2, 5], 1),
            (&[3, 4], 1),
            (&[3, 5], 1),
            (&[1, 2, 4], 1),
            (&[1, 2, 5], 1),
            (&[1, 3, 4], 1),
            (&[1, 3, 5], 2),
            (&[1, 4, 5], 1),
            (&[2, 3, 5], 1),
            (&[2, 4, 5], 1),
        ];
        let expected =
            QsymExpr::from_terms(Basis::F, 6, subsets.iter().map(|(s, k)| (subset_comp(6, s), int(*k)))).unwrap();
        assert_eq!(schur_in_f(&p("321")), expected);
    }

    #[test]
    fn tableau_bound_is_enforced() {
        let big = SkewShape::straight(Partition::new(vec![13]).unwrap()).unwrap();
        assert!(matches!(skew_schur_in_f(&big), Err(Error::ResourceBound { .. })));
        assert!(skew_schur_in_f_bounded(&big, 13).is_ok());
    }

    #[test]
    fn tableaux_are_standard() {
        let shape = SkewShape::parse("4332/221").unwrap();
        let all = standard_tableaux(&shape).unwrap();
        for t in &all {
            for (i, row) in t.rows().iter().enumerate() {
                assert!(row.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(row.len(), shape.row_length(i));
            }
        }
        let f = skew_schur_in_f(&shape).unwrap();
        let total: Rational = f.terms().map(|(_, k)| k.clone()).sum();
        assert_eq!(total, int(all.len() as i64));
        let mut from_list: BTreeMap<Composition, i64> = BTreeMap::new();
        for t in &all {
            *from_list.entry(t.descent_set().composition()).or_default() += 1;
        }
        for (beta, k) in f.terms() {
            assert_eq!(int(from_list[beta]), *k);
        }
    }

    /// Hook length formula for `f^λ`.
    fn hook_count(lambda: &Partition) -> u64 {
        let n = lambda.size() as u64;
        let conj = lambda.conjugate();
        let mut hooks: u64 = 1;
        for i in 0..lambda.len() {
            for j in 0..lambda.part(i) {
                hooks *= ((lambda.part(i) - j) + (conj.part(j) - i) - 1) as u64;
            }
        }
        (1..=n).product::<u64>() / hooks
    }

    #[test]
    fn straight_shapes_match_hook_lengths_and_are_symmetric() {
        for n in 1..=8 {
            for lambda in partitions(n) {
                let f = schur_in_f(&lambda);
                let total: Rational = f.terms().map(|(_, k)| k.clone()).sum();
                assert_eq!(total, int(hook_count(&lambda) as i64), "{lambda}");
                assert!(f.is_symmetric());
                assert!(f.terms().all(|(_, k)| rational::is_nonnegative_integer(k)));
            }
        }
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi(&SkewShape::parse("22").unwrap()), hexpr(&[("22", 1), ("31", -1)]));
        assert_eq!(jacobi_trudi(&SkewShape::parse("5").unwrap()), hexpr(&[("5", 1)]));
        assert_eq!(jacobi_trudi(&SkewShape::parse("4332/221").unwrap()), ribbon_in_h(&c("2212")));
    }

    #[test]
    fn jacobi_trudi_matches_ribbons_and_tableaux() {
        for n in 1..=7 {
            for beta in compositions(n) {
                assert_eq!(jacobi_trudi(&ribbon_shape(&beta)), ribbon_in_h(&beta), "{beta}");
            }
        }
        for n in 1..=6 {
            for lambda in partitions(n) {
                let jt = jacobi_trudi(&SkewShape::straight(lambda.clone()).unwrap());
                assert_eq!(jt.to_qsym().m_to_f().unwrap(), schur_in_f(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn h_image_agrees_with_tableaux_on_ribbons() {
        for n in 1..=7 {
            for beta in compositions(n) {
                assert_eq!(ribbon_in_h(&beta).to_qsym().m_to_f().unwrap(), ribbon_in_f(&beta).unwrap(), "{beta}");
            }
        }
    }

    #[test]
    fn ribbon_products() {
        let one = c("1");
        assert_eq!(ribbon_product_terms(&one, &one), [c("11"), c("2")]);
        for m in 1..=5u32 {
            let sum = compositions(m as usize)
                .iter()
                .fold(SymHExpr::zero(m as usize), |acc, a| acc.add(&ribbon_in_h(a)).unwrap());
            assert_eq!(ribbon_in_h(&one).pow(m), sum);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = compositions(rng.gen_range(1..=4));
            let a = &a[rng.gen_range(0..a.len())];
            let b = compositions(rng.gen_range(1..=4));
            let b = &b[rng.gen_range(0..b.len())];
            let prod = ribbon_product(a, b);
            assert_eq!(prod, ribbon_in_h(a).mul(&ribbon_in_h(b)));
            assert_eq!(prod, ribbon_product(b, a));
        }
    }

    #[test]
    fn ribbon_equality_examples() {
        assert!(ribbon_equal(&c("12132"), &c("13212")));
        assert!(!ribbon_equal(&c("211"), &c("121")));
        let beta = c("1321");
        assert!(ribbon_equal(&beta, &beta.reverse()));
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 1..=6 {
            let all = compositions(n);
            let f: Vec<QsymExpr> = all.iter().map(|b| ribbon_in_f(b).unwrap()).collect();
            let h: Vec<SymHExpr> = all.iter().map(ribbon_in_h).collect();
            for i in 0..all.len() {
                for j in 0..all.len() {
                    let e = equivalent(&all[i], &all[j]);
                    assert_eq!(h[i] == h[j], e, "{} {}", all[i], all[j]);
                    assert_eq!(f[i] == f[j], e, "{} {}", all[i], all[j]);
                }
            }
        }
    }

    #[test]
    fn distinct_ribbons_match_class_count() {
        for n in 1..=9 {
            let all = compositions(n);
            let ribbons: BTreeSet<Vec<(Partition, Rational)>> =
                all.iter().map(|b| ribbon_in_h(b).terms().map(|(l, k)| (l.clone(), k.clone())).collect()).collect();
            let classes: BTreeSet<Composition> = all.iter().map(class_representative).collect();
            assert_eq!(ribbons.len(), classes.len(), "n={n}");
        }
    }

    #[test]
    fn lambda_tilde_examples() {
        assert_eq!(lambda_tilde(&p("33")).unwrap(), c("1221"));
        assert_eq!(lambda_tilde(&p("4")).unwrap(), c("4"));
        assert_eq!(lambda_tilde(&p("1111")).unwrap(), c("1111"));
        assert!(lambda_tilde(&Partition::empty()).is_err());
    }

    #[test]
    fn spread_of_schur_functions() {
        assert_eq!(spread(&schur_in_f(&p("33"))).unwrap(), Some((c("1221"), c("33"))));
        assert_eq!(spread(&fexpr(&[("132", 1)])).unwrap(), Some((c("132"), c("132"))));
        assert_eq!(spread(&QsymExpr::zero(3, Basis::F)).unwrap(), None);
        for n in 1..=8 {
            for lambda in partitions(n) {
                let expected = (lambda_tilde(&lambda).unwrap(), lambda.to_composition().unwrap());
                assert_eq!(spread(&schur_in_f(&lambda)).unwrap(), Some(expected), "{lambda}");
            }
        }
    }

    #[test]
    fn schur_extraction() {
        let one = |s: &str| (p(s), int(1));
        assert_eq!(schur_extract(&fexpr(&[("22", 1), ("121", 1)])).unwrap(), BTreeMap::from([one("22")]));
        let e = fexpr(&[("31", 1), ("13", 1), ("211", 1), ("112", 1)]);
        let expected = BTreeMap::from([one("31"), one("211"), (p("22"), int(-1))]);
        assert_eq!(schur_extract(&e).unwrap(), expected);
        assert!(matches!(schur_extract(&fexpr(&[("21", 1)])), Err(Error::NotSymmetric(_))));
        for lambda in partitions(6) {
            assert_eq!(schur_extract(&schur_in_f(&lambda)).unwrap(), BTreeMap::from([(lambda.clone(), int(1))]));
        }
    }

    #[test]
    fn lr_coefficients() {
        assert_eq!(ribbon_lr_coeffs(&c("12132")).unwrap(), ribbon_lr_coeffs(&c("13212")).unwrap());
        assert_eq!(ribbon_lr_coeffs(&c("211")).unwrap(), ribbon_lr_coeffs(&c("112")).unwrap());
        assert_ne!(ribbon_lr_coeffs(&c("211")).unwrap(), ribbon_lr_coeffs(&c("121")).unwrap());
        assert_eq!(ribbon_lr_coeffs(&c("5")).unwrap(), BTreeMap::from([(p("5"), 1)]));
    }

    #[test]
    fn random_skew_shapes_are_schur_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let mut tested = 0;
        while tested < 40 {
            let outer = partitions(rng.gen_range(2..=9));
            let outer = outer[rng.gen_range(0..outer.len())].clone();
            let inner: Vec<usize> = (0..outer.len()).map(|i| rng.gen_range(0..=outer.part(i))).collect();
            let mut inner: Vec<usize> = inner.into_iter().filter(|&x| x > 0).collect();
            inner.sort_unstable_by(|a, b| b.cmp(a));
            let inner = Partition::new(inner).unwrap();
            let Ok(shape) = SkewShape::new(outer, inner) else { continue };
            let f = skew_schur_in_f(&shape).unwrap();
            assert!(f.is_symmetric());
            for (_, k) in schur_extract(&f).unwrap() {
                assert!(rational::is_nonnegative_integer(&k), "{shape}");
            }
            assert_eq!(jacobi_trudi(&shape).to_qsym().m_to_f().unwrap(), f, "{shape}");
            tested += 1;
        }
    }

    #[test]
    fn plethysm_average() {
        assert!(verify_plethysm_average(2, &c("12")).unwrap());
        let lhs = ribbon_in_h(&c("132")).add(&ribbon_in_h(&c("1212"))).unwrap();
        assert_eq!(lhs, ribbon_in_h(&c("12")).pow(2));
        assert!(verify_plethysm_average(1, &c("213")).unwrap());
        assert!(verify_plethysm_average(3, &c("2")).unwrap());
        assert!(verify_plethysm_average_f(2, &c("21"), PLETHYSM_F_LIMIT).unwrap());
        assert!(matches!(verify_plethysm_average(7, &c("111")), Err(Error::ResourceBound { .. })));
    }
}
