//! Weighted families of subsets of `[n]` and their balance conditions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::composition::{partitions, DescentSet, Partition};
use crate::error::{Error, Result};
use crate::qsym::{Basis, QsymExpr};
use crate::rational::Rational;

/// A multicollection `{S^{k_S}}` of subsets of `[n]` with rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multicollection {
    n: usize,
    weights: BTreeMap<Vec<usize>, Rational>,
}

impl Multicollection {
    pub fn new(n: usize) -> Self {
        Multicollection { n, weights: BTreeMap::new() }
    }

    pub fn from_weights(n: usize, weights: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Result<Self> {
        let mut mc = Self::new(n);
        for (s, k) in weights {
            mc.add(s, k)?;
        }
        Ok(mc)
    }

    /// The multicollection of `F`-coefficients `k_S = c_{β(S)}` of a
    /// degree `n + 1` expression.
    pub fn from_qsym(e: &QsymExpr) -> Result<Self> {
        if e.degree() == 0 {
            return Err(Error::Usage("degree 0 has no ground set".into()));
        }
        let f = e.to_basis(Basis::F);
        let mut mc = Self::new(e.degree() - 1);
        for (beta, k) in f.terms() {
            mc.add(beta.descent_set().elements().to_vec(), k.clone())?;
        }
        Ok(mc)
    }

    pub fn add(&mut self, mut subset: Vec<usize>, k: Rational) -> Result<()> {
        subset.sort_unstable();
        subset.dedup();
        if subset.iter().any(|&x| x == 0 || x > self.n) {
            return Err(Error::Parse(format!("subset {subset:?} is not contained in [{}]", self.n)));
        }
        let w = self.weights.entry(subset.clone()).or_insert_with(Rational::zero);
        *w += k;
        if w.is_zero() {
            self.weights.remove(&subset);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.weights.iter()
    }

    /// `Σ k_S F_{β(S)}`, of degree `n + 1`.
    pub fn to_qsym(&self) -> QsymExpr {
        let n = self.n + 1;
        QsymExpr::from_terms(
            Basis::F,
            n,
            self.weights.iter().map(|(s, k)| {
                let d = DescentSet::new(n, s.clone()).expect("subsets of [n] are descent sets in degree n+1");
                (d.composition(), k.clone())
            }),
        )
        .expect("every key has degree n+1")
    }

    fn covering_sum(&self, t: &[usize]) -> Rational {
        self.weights.iter().filter(|(s, _)| t.iter().all(|x| s.binary_search(x).is_ok())).map(|(_, k)| k.clone()).sum()
    }
}

/// Lengths of the maximal runs of consecutive integers in `S ⊆ [n]`, sorted
/// decreasingly and padded with zeros to length `n + 1 - |S|`.
pub fn profile(subset: &[usize], n: usize) -> Vec<usize> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let mut j = i + 1;
        while j < s.len() && s[j] == s[j - 1] + 1 {
            j += 1;
        }
        runs.push(j - i);
        i = j;
    }
    runs.sort_unstable_by(|a, b| b.cmp(a));
    runs.resize(n + 1 - s.len(), 0);
    runs
}

/// `F_λ`: subsets of `[n]` with profile `λ_1 - 1, …, λ_k - 1`, for `λ ⊢ n + 1`.
pub fn f_lambda(lambda: &Partition) -> Result<Vec<Vec<usize>>> {
    let n = lambda
        .size()
        .checked_sub(1)
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidPartition(format!("{lambda} is too small for a ground set")))?;
    if n >= usize::BITS as usize {
        return Err(Error::ResourceBound { what: "ground set size", got: n, limit: usize::BITS as usize - 1 });
    }
    let target: Vec<usize> = lambda.parts().iter().map(|p| p - 1).collect();
    Ok((0usize..1 << n)
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>())
        .filter(|s| s.len() + lambda.len() == n + 1 && profile(s, n) == target)
        .collect())
}

/// The common value `κ_λ = Σ_{S ⊇ T} k_S` over `T ∈ F_λ`, if it exists.
pub fn balanced_check(mc: &Multicollection, lambda: &Partition) -> Result<Option<Rational>> {
    if lambda.size() != mc.n + 1 {
        return Err(Error::DegreeMismatch(lambda.size(), mc.n + 1));
    }
    let mut value: Option<Rational> = None;
    for t in f_lambda(lambda)? {
        let sum = mc.covering_sum(&t);
        match &value {
            None => value = Some(sum),
            Some(v) if *v != sum => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(value)
}

/// `λ`-balanced for every `λ ⊢ n + 1`.
pub fn fully_balanced(mc: &Multicollection) -> Result<bool> {
    for lambda in partitions(mc.n + 1) {
        if balanced_check(mc, &lambda)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
