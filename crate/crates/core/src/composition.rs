//! Integer compositions, partitions and descent sets.
//!
//! A [`Composition`] of `n` is an ordered list of positive parts summing to
//! `n`; it corresponds bijectively to a [`DescentSet`] inside `[n-1]` via its
//! partial sums. A [`Partition`] is a weakly decreasing composition. The
//! multiset of sorted coarsenings of a composition, [`PartitionMultiset`], is
//! the complete invariant for ribbon Schur equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered list of positive integers.
///
/// The empty composition exists only as the degree-zero unit of the
/// quasisymmetric algebra (see [`Composition::empty`]); parsing and
/// [`Composition::new`] never produce it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    size: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("composition must have at least one part".into()));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("part {} is zero", pos + 1)));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Composition { parts, size }
    }

    /// The empty composition, indexing the unit `M_() = F_() = 1`.
    pub fn empty() -> Self {
        Composition { parts: Vec::new(), size: 0 }
    }

    /// The one-part composition `n`.
    pub fn single(n: usize) -> Self {
        assert!(n > 0, "single-part composition needs a positive part");
        Self::from_parts_unchecked(vec![n])
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        assert!(n > 0, "1^n needs n > 0");
        Self::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `S(β) = {β1, β1+β2, …}` excluding `n`.
    pub fn descent_set(&self) -> DescentSet {
        let mut acc = 0;
        let mut elements = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in &self.parts[..self.len().saturating_sub(1)] {
            acc += p;
            elements.push(acc);
        }
        DescentSet { n: self.size, elements }
    }

    /// Bitmask of `S(β)`: bit `i-1` is set when `i ∈ S(β)`.
    pub fn descent_mask(&self) -> u64 {
        debug_assert!(self.size <= 64);
        let mut acc = 0;
        let mut mask = 0u64;
        for &p in &self.parts[..self.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::descent_mask`] for a composition of `n`.
    pub fn from_descent_mask(mask: u64, n: usize) -> Self {
        debug_assert!((1..=64).contains(&n));
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 1..n {
            if mask & (1 << (i - 1)) != 0 {
                parts.push(i - last);
                last = i;
            }
        }
        parts.push(n - last);
        Self::from_parts_unchecked(parts)
    }

    /// `β* = βk … β2 β1`.
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts, size: self.size }
    }

    pub fn is_palindrome(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }

    /// `λ(β)`: the parts sorted into weakly decreasing order.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All coarsenings `α ≥ β`, one per subset of the `l(β)-1` merge
    /// positions, in binary-counter order (so `β` itself comes first and the
    /// single part `n` last).
    pub fn coarsenings(&self) -> Vec<Composition> {
        let gaps = self.len().saturating_sub(1);
        assert!(gaps < 64, "too many parts to enumerate coarsenings");
        (0..1u64 << gaps).map(|mask| self.merge(mask)).collect()
    }

    /// Merge the parts at every gap whose bit is set in `mask` (bit `j`
    /// joins parts `j` and `j+1`, zero-based).
    fn merge(&self, mask: u64) -> Composition {
        let mut parts = Vec::with_capacity(self.len());
        let mut current = self.parts[0];
        for (j, &p) in self.parts.iter().enumerate().skip(1) {
            if mask & (1 << (j - 1)) != 0 {
                current += p;
            } else {
                parts.push(current);
                current = p;
            }
        }
        parts.push(current);
        Composition { parts, size: self.size }
    }

    /// All refinements `γ ≤ β`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.parts {
            let pieces = compositions(p);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Self::from_parts_unchecked).collect()
    }

    /// `M(β) = {λ(α) | α ≥ β}` as a multiset.
    pub fn coarsening_multiset(&self) -> PartitionMultiset {
        let mut counts = BTreeMap::new();
        for alpha in self.coarsenings() {
            *counts.entry(alpha.sort_to_partition()).or_insert(0u64) += 1;
        }
        PartitionMultiset { counts }
    }

    /// Lexicographic comparison on part lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }

    /// Comma-separated decimal parts, e.g. `2,2,1,2`.
    pub fn to_text(&self) -> String {
        join_parts(&self.parts)
    }

    /// Digit string such as `2212`, or `None` if some part exceeds 9.
    pub fn to_compact(&self) -> Option<String> {
        if self.parts.iter().all(|&p| p <= 9) {
            Some(self.parts.iter().map(|p| p.to_string()).collect())
        } else {
            None
        }
    }

    /// Parse either the comma-separated format or, when the token has no
    /// comma, a compact digit string where each digit is one part. A trailing
    /// comma (`12,`) forces a single multi-digit part.
    pub fn parse_flexible(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            return s.trim_end_matches(',').parse();
        }
        let parts = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("invalid composition digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({})", self.to_text())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// A weakly decreasing list of positive integers; the empty partition is
/// allowed (it is the inner shape of a straight Ferrers diagram).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// The partition read as a composition (`None` for the empty partition).
    pub fn to_composition(&self) -> Option<Composition> {
        Composition::new(self.0.clone()).ok()
    }

    /// Partition obtained by merging the parts of `self` and `other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn to_text(&self) -> String {
        join_parts(&self.0)
    }

    pub fn parse_flexible(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let comp = Composition::parse_flexible(s)?;
        Partition::new(comp.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.to_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        Partition::new(parse_parts(s)?)
    }
}

/// A subset of `[n-1]`, stored as a strictly increasing list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescentSet("ambient size must be positive".into()));
        }
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDescentSet(format!("{elements:?} has repeated elements")));
        }
        if let Some(&e) = elements.iter().find(|&&e| e == 0 || e >= n) {
            return Err(Error::InvalidDescentSet(format!("{e} is outside [1, {}]", n - 1)));
        }
        Ok(DescentSet { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `β(S) = i1 (i2-i1) … (n - i_{k-1})`.
    pub fn composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.elements.len() + 1);
        let mut last = 0;
        for &e in &self.elements {
            parts.push(e - last);
            last = e;
        }
        parts.push(self.n - last);
        Composition::from_parts_unchecked(parts)
    }

    /// `[n-1] \ S`.
    pub fn complement(&self) -> DescentSet {
        DescentSet { n: self.n, elements: (1..self.n).filter(|&i| !self.contains(i)).collect() }
    }
}

/// A multiset of partitions, realized as partition → positive count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionMultiset {
    counts: BTreeMap<Partition, u64>,
}

impl PartitionMultiset {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// Entries in canonical (descending lexicographic) partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.counts.iter().rev().map(|(p, &c)| (p, c))
    }
}

/// All compositions of `n` in lexicographic order (`1^n` first, `n` last).
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `n` in descending lexicographic order (`n` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

fn join_parts(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid part {t:?} in {s:?}"))))
        .collect()
}
