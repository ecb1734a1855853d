//! The monoid of compositions under `∘`, irreducible factorization, and
//! the equivalence `β ∼ γ`.
//!
//! `α ∘ β = β^{⊙α1} · β^{⊙α2} ⋯ β^{⊙αk}`. Every composition has a unique
//! irreducible factorization, and two compositions are equivalent exactly
//! when their factorizations agree up to reversing individual factors.

use std::collections::BTreeSet;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::type_profile::TypeProfile;

/// `α · β`.
pub fn concat(alpha: &Composition, beta: &Composition) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts.extend_from_slice(beta.parts());
    Composition::from_parts_unchecked(parts)
}

/// `α ⊙ β`: the last part of `α` is added to the first part of `β`.
pub fn near_concat(alpha: &Composition, beta: &Composition) -> Composition {
    if alpha.is_empty() {
        return beta.clone();
    }
    if beta.is_empty() {
        return alpha.clone();
    }
    let mut parts = alpha.parts().to_vec();
    *parts.last_mut().unwrap() += beta.parts()[0];
    parts.extend_from_slice(&beta.parts()[1..]);
    Composition::from_parts_unchecked(parts)
}

/// `β^{⊙k}` for `k ≥ 1`.
fn near_power(beta: &Composition, k: usize) -> Vec<usize> {
    let l = beta.len();
    let mut parts = Vec::with_capacity(k * (l - 1) + 1);
    parts.extend_from_slice(beta.parts());
    for _ in 1..k {
        *parts.last_mut().unwrap() += beta.parts()[0];
        parts.extend_from_slice(&beta.parts()[1..]);
    }
    parts
}

/// `α ∘ β`.
pub fn circ(alpha: &Composition, beta: &Composition) -> Composition {
    let mut parts = Vec::new();
    for &a in alpha.parts() {
        parts.extend(near_power(beta, a));
    }
    Composition::from_parts_unchecked(parts)
}

/// Left-to-right `∘` of a non-empty factor list.
pub fn circ_all<'a>(factors: impl IntoIterator<Item = &'a Composition>) -> Option<Composition> {
    factors.into_iter().fold(None, |acc, f| match acc {
        None => Some(f.clone()),
        Some(a) => Some(circ(&a, f)),
    })
}

/// Whether `δ ∘ ε` is a trivial factorization.
pub fn is_trivial_pair(delta: &Composition, epsilon: &Composition) -> bool {
    let is_one = |c: &Composition| c.parts() == [1];
    is_one(delta)
        || is_one(epsilon)
        || (delta.len() == 1 && epsilon.len() == 1)
        || (delta.is_all_ones() && epsilon.is_all_ones())
}

/// Find `δ, ε` with `β = δ ∘ ε` and `|ε| = p`, if they exist.
///
/// The candidate is read off `h`: `S(ε)` is the set of `x < p` with
/// `h(x) ∈ {1, 2}` and `S(δ)` the set of `y` with `h(py) ∈ {1, 2}`. The
/// candidate is accepted only if it recomposes to `β`.
pub fn try_split(beta: &Composition, p: usize) -> Result<Option<(Composition, Composition)>> {
    let n = beta.size();
    if p <= 1 || p >= n {
        return Err(Error::Usage(format!("split size {p} must satisfy 1 < p < {n}")));
    }
    if !n.is_multiple_of(p) {
        return Err(Error::Usage(format!("split size {p} does not divide {n}")));
    }
    let h = TypeProfile::of(beta);
    let positive = |x: usize| matches!(h.h_at(x as i64), 1 | 2);
    let eps_mask = (1..p).filter(|&x| positive(x)).fold(0u64, |m, x| m | 1 << (x - 1));
    let q = n / p;
    let delta_mask = (1..q).filter(|&y| positive(p * y)).fold(0u64, |m, y| m | 1 << (y - 1));
    let epsilon = Composition::from_descent_mask(eps_mask, p);
    let delta = Composition::from_descent_mask(delta_mask, q);
    Ok((circ(&delta, &epsilon) == *beta).then_some((delta, epsilon)))
}

fn proper_divisors(n: usize) -> impl Iterator<Item = usize> {
    (2..n).filter(move |d| n.is_multiple_of(*d))
}

/// Irreducible `∘`-factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Composition>,
    symmetric_flags: Vec<bool>,
}

impl Factorization {
    fn from_factors(factors: Vec<Composition>) -> Self {
        let symmetric_flags = factors.iter().map(Composition::is_palindrome).collect();
        Factorization { factors, symmetric_flags }
    }

    pub fn factors(&self) -> &[Composition] {
        &self.factors
    }

    pub fn symmetric_flags(&self) -> &[bool] {
        &self.symmetric_flags
    }

    /// Number of factors that differ from their reversal.
    pub fn nonsymmetric_count(&self) -> usize {
        self.symmetric_flags.iter().filter(|&&s| !s).count()
    }

    pub fn compose(&self) -> Composition {
        circ_all(&self.factors).expect("factorization is never empty")
    }
}

/// Which end of the composition to peel factors from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelOrder {
    Right,
    Left,
}

pub fn irreducible_factorization(beta: &Composition) -> Factorization {
    factorize_with(beta, PeelOrder::Right)
}

/// Factor by repeatedly splitting off the smallest non-unit factor from one
/// end, then merging adjacent pairs that form trivial factorizations.
pub fn factorize_with(beta: &Composition, order: PeelOrder) -> Factorization {
    let mut left: Vec<Composition> = Vec::new();
    let mut right: Vec<Composition> = Vec::new();
    let mut rest = beta.clone();
    'peel: loop {
        let n = rest.size();
        for d in proper_divisors(n) {
            let p = match order {
                PeelOrder::Right => d,
                PeelOrder::Left => n / d,
            };
            if let Some((delta, epsilon)) = try_split(&rest, p).expect("p is a proper divisor") {
                match order {
                    PeelOrder::Right => {
                        right.push(epsilon);
                        rest = delta;
                    }
                    PeelOrder::Left => {
                        left.push(delta);
                        rest = epsilon;
                    }
                }
                continue 'peel;
            }
        }
        break;
    }
    left.push(rest);
    left.extend(right.into_iter().rev());
    Factorization::from_factors(merge_trivial_pairs(left))
}

fn merge_trivial_pairs(mut factors: Vec<Composition>) -> Vec<Composition> {
    loop {
        let pos = factors
            .windows(2)
            .position(|w| (w[0].len() == 1 && w[1].len() == 1) || (w[0].is_all_ones() && w[1].is_all_ones()));
        let Some(i) = pos else { return factors };
        let merged = circ(&factors[i], &factors[i + 1]);
        factors.splice(i..=i + 1, [merged]);
    }
}

/// Every composition obtained by reversing some factors of the irreducible
/// factorization, sorted lexicographically.
pub fn equivalence_class(beta: &Composition) -> Vec<Composition> {
    let f = irreducible_factorization(beta);
    let k = f.factors().len();
    let mut class = BTreeSet::new();
    for mask in 0u64..1 << k {
        let chosen: Vec<Composition> = f
            .factors()
            .iter()
            .enumerate()
            .map(|(i, c)| if mask & (1 << i) != 0 { c.reverse() } else { c.clone() })
            .collect();
        class.insert(circ_all(&chosen).unwrap());
    }
    class.into_iter().collect()
}

/// Lexicographically smallest member of the class of `β`.
pub fn class_representative(beta: &Composition) -> Composition {
    equivalence_class(beta).swap_remove(0)
}

/// How to decide `β ∼ γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceRoute {
    /// Compare the coarsening multisets `M(β)` and `M(γ)`.
    Multiset,
    /// Test membership of `γ` in the factorization class of `β`.
    Factorization,
}

pub fn equivalent(beta: &Composition, gamma: &Composition) -> bool {
    equivalent_via(beta, gamma, EquivalenceRoute::Multiset)
}

pub fn equivalent_via(beta: &Composition, gamma: &Composition, route: EquivalenceRoute) -> bool {
    if beta.size() != gamma.size() {
        return false;
    }
    match route {
        EquivalenceRoute::Multiset => beta.coarsening_multiset() == gamma.coarsening_multiset(),
        EquivalenceRoute::Factorization => equivalence_class(beta).binary_search(gamma).is_ok(),
    }
}
