//! Homogeneous quasisymmetric functions in the monomial (`M`) and
//! fundamental (`F`) bases.
//!
//! `F_β = Σ_{γ ≤ β} M_γ`, so if `Σ c_β F_β = Σ d_β M_β` then
//! `d_β = Σ_{α ≥ β} c_α` and `c_β = Σ_{α ≥ β} (-1)^{l(α)-l(β)} d_α`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::composition::{compositions, Composition, Partition};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial quasisymmetric functions `M_β`.
    M,
    /// Fundamental quasisymmetric functions `F_β`.
    F,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
        }
    }
}

/// A sparse quasisymmetric function of fixed degree in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsymExpr {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Composition, Rational>,
}

impl QsymExpr {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        QsymExpr { degree, basis, terms: BTreeMap::new() }
    }

    /// The unit `1 = M_() = F_()` in degree 0.
    pub fn one(basis: Basis) -> Self {
        let mut e = Self::zero(0, basis);
        e.terms.insert(Composition::empty(), Rational::one());
        e
    }

    pub fn basis_element(basis: Basis, beta: Composition) -> Self {
        let mut e = Self::zero(beta.size(), basis);
        e.terms.insert(beta, Rational::one());
        e
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Composition, Rational)>,
    ) -> Result<Self> {
        let mut e = Self::zero(degree, basis);
        for (beta, c) in terms {
            if beta.size() != degree {
                return Err(Error::DegreeMismatch(beta.size(), degree));
            }
            e.add_term(beta, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Non-zero terms in lexicographic order of compositions.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.terms.iter()
    }

    /// Number of non-zero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, beta: &Composition) -> Rational {
        self.terms.get(beta).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, beta: Composition, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(beta.size(), self.degree);
        match self.terms.entry(beta) {
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

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (beta, c) in &other.terms {
            out.add_term(beta.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (beta, c) in &self.terms {
            out.add_term(beta.clone(), c * k);
        }
        out
    }

    /// Rewrite an `F`-expansion in the `M` basis.
    pub fn f_to_m(&self) -> Result<Self> {
        self.expect_basis(Basis::F)?;
        let mut out = Self::zero(self.degree, Basis::M);
        for (alpha, c) in &self.terms {
            for gamma in refinements_or_unit(alpha) {
                out.add_term(gamma, c.clone());
            }
        }
        Ok(out)
    }

    /// Rewrite an `M`-expansion in the `F` basis.
    pub fn m_to_f(&self) -> Result<Self> {
        self.expect_basis(Basis::M)?;
        let mut out = Self::zero(self.degree, Basis::F);
        for (alpha, d) in &self.terms {
            for beta in refinements_or_unit(alpha) {
                let sign = rational::sign(beta.len() - alpha.len());
                out.add_term(beta, sign * d);
            }
        }
        Ok(out)
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        match (self.basis, basis) {
            (Basis::F, Basis::M) => self.f_to_m().unwrap(),
            (Basis::M, Basis::F) => self.m_to_f().unwrap(),
            _ => self.clone(),
        }
    }

    /// Equality as quasisymmetric functions, regardless of basis.
    pub fn same_function(&self, other: &Self) -> bool {
        self.degree == other.degree && self.to_basis(Basis::M) == other.to_basis(Basis::M)
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { expected: basis.name(), found: self.basis.name() })
        }
    }

    /// Whether the `M`-coefficients are constant on rearrangement classes.
    pub fn is_symmetric(&self) -> bool {
        let m = self.to_basis(Basis::M);
        let mut fibers: BTreeMap<Partition, (usize, &Rational)> = BTreeMap::new();
        for (alpha, d) in &m.terms {
            match fibers.entry(alpha.sort_to_partition()) {
                Entry::Vacant(v) => {
                    v.insert((1, d));
                }
                Entry::Occupied(mut o) => {
                    if o.get().1 != d {
                        return false;
                    }
                    o.get_mut().0 += 1;
                }
            }
        }
        fibers.iter().all(|(lambda, (seen, _))| *seen as u128 == rearrangement_count(lambda))
    }
}

impl fmt::Display for QsymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (beta, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}[{}]", rational::to_text(c), self.basis.name(), beta)?;
        }
        Ok(())
    }
}

fn refinements_or_unit(alpha: &Composition) -> Vec<Composition> {
    if alpha.is_empty() {
        vec![Composition::empty()]
    } else {
        alpha.refinements()
    }
}

/// Number of distinct rearrangements of the parts of `λ`.
fn rearrangement_count(lambda: &Partition) -> u128 {
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        for k in 1..=run as u128 {
            placed += 1;
            count = count * placed / k;
        }
        i += run;
    }
    count
}

/// Quasi-shuffles of two part lists with their multiplicities.
fn quasi_shuffles(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    // table[i][j] holds the quasi-shuffles of a[i..] and b[j..]
    let (la, lb) = (a.len(), b.len());
    let mut table: Vec<Vec<BTreeMap<Vec<usize>, u64>>> = vec![vec![BTreeMap::new(); lb + 1]; la + 1];
    for i in (0..=la).rev() {
        for j in (0..=lb).rev() {
            let mut here = BTreeMap::new();
            if i == la || j == lb {
                let mut tail = a[i..].to_vec();
                tail.extend_from_slice(&b[j..]);
                here.insert(tail, 1);
            } else {
                let mut push = |head: usize, from: &BTreeMap<Vec<usize>, u64>| {
                    for (w, &k) in from {
                        let mut v = Vec::with_capacity(w.len() + 1);
                        v.push(head);
                        v.extend_from_slice(w);
                        *here.entry(v).or_insert(0) += k;
                    }
                };
                push(a[i], &table[i + 1][j]);
                push(b[j], &table[i][j + 1]);
                push(a[i] + b[j], &table[i + 1][j + 1]);
            }
            table[i][j] = here;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// The `M`-basis product: `M_α M_β` is the sum over quasi-shuffles of `α`
/// and `β`.
pub fn quasi_shuffle_product(a: &QsymExpr, b: &QsymExpr) -> Result<QsymExpr> {
    a.expect_basis(Basis::M)?;
    b.expect_basis(Basis::M)?;
    let mut out = QsymExpr::zero(a.degree + b.degree, Basis::M);
    for (alpha, ca) in &a.terms {
        for (beta, cb) in &b.terms {
            let coeff = ca * cb;
            for (w, k) in quasi_shuffles(alpha.parts(), beta.parts()) {
                out.add_term(Composition::from_parts_unchecked(w), &coeff * Rational::from_integer(k.into()));
            }
        }
    }
    Ok(out)
}

/// Product in the basis of the left factor.
pub fn product(a: &QsymExpr, b: &QsymExpr) -> QsymExpr {
    let p = quasi_shuffle_product(&a.to_basis(Basis::M), &b.to_basis(Basis::M)).unwrap();
    p.to_basis(a.basis)
}

/// `m_λ = Σ_{λ(β) = λ} M_β`.
pub fn monomial_sym(lambda: &Partition) -> QsymExpr {
    let n = lambda.size();
    if n == 0 {
        return QsymExpr::one(Basis::M);
    }
    let mut out = QsymExpr::zero(n, Basis::M);
    let mut parts: Vec<usize> = lambda.parts().to_vec();
    parts.sort_unstable();
    loop {
        out.add_term(Composition::from_parts_unchecked(parts.clone()), Rational::one());
        if !next_permutation(&mut parts) {
            break;
        }
    }
    out
}

/// `m_λ` in the `F` basis, read directly off coarsening multisets:
/// `[m_λ]_{F_β} = (-1)^{l(λ)-l(β)} mult_{M(β)}(λ)`.
pub fn monomial_sym_in_f(lambda: &Partition) -> QsymExpr {
    let n = lambda.size();
    if n == 0 {
        return QsymExpr::one(Basis::F);
    }
    let mut out = QsymExpr::zero(n, Basis::F);
    for beta in compositions(n) {
        if beta.len() < lambda.len() {
            continue;
        }
        let mult = beta.coarsening_multiset().multiplicity(lambda);
        let sign = rational::sign(beta.len() - lambda.len());
        out.add_term(beta, sign * Rational::from_integer(mult.into()));
    }
    out
}

/// Lexicographic next permutation; `false` once the last one is reached.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
