//! Permutations in one-line notation, tensor products, the `σ*` involution
//! and joint descent statistics of `σ` and `σ⁻¹`.

use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::composition::{Composition, DescentSet};
use crate::error::{Error, Result};
use crate::ops::circ;
use crate::qsym::next_permutation;

/// Default bound on `n` for [`descent_pair_matrix`].
pub const DESCENT_MATRIX_LIMIT: usize = 9;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = σ(i+1), values in 1..=n
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// `n n-1 … 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `d(σ) = {i : σ(i) > σ(i+1)}`.
    pub fn descents(&self) -> DescentSet {
        let d = (1..self.len()).filter(|&i| self.images[i - 1] > self.images[i]).collect();
        DescentSet::new(self.len(), d).expect("descents lie in 1..n")
    }

    pub fn descent_composition(&self) -> Composition {
        self.descents().composition()
    }

    /// `(σ⊗τ)((i-1)n + j) = (σ(i)-1)n + τ(j)`, the block matrix of `σ` with
    /// blocks `τ` read row by row.
    pub fn tensor(&self, tau: &Permutation) -> Permutation {
        let n = tau.len();
        let images = self.images.iter().flat_map(|&s| tau.images.iter().map(move |&t| (s - 1) * n + t)).collect();
        Permutation { images }
    }

    /// `σ*(i) = n + 1 - σ(n + 1 - i)`.
    pub fn star(&self) -> Permutation {
        let n = self.len();
        Permutation { images: self.images.iter().rev().map(|&v| n + 1 - v).collect() }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let images = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid entry {t:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("invalid digit in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            self.images.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            let text: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            f.write_str(&text.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Whether `d(σ⊗τ) = S(β∘γ)` where `β`, `γ` are the descent compositions of
/// `σ`, `τ`.
pub fn verify_tensor_descents(sigma: &Permutation, tau: &Permutation) -> bool {
    if sigma.is_empty() || tau.is_empty() {
        return sigma.tensor(tau).is_empty();
    }
    sigma.tensor(tau).descent_composition() == circ(&sigma.descent_composition(), &tau.descent_composition())
}

/// `N[α][β] = #{σ ∈ S_n : d(σ) = S(α), d(σ⁻¹) = S(β)}`, indexed by descent
/// masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentPairMatrix {
    n: usize,
    counts: Vec<u64>,
}

impl DescentPairMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    fn side(&self) -> usize {
        1 << self.n.saturating_sub(1)
    }

    pub fn get(&self, alpha: &Composition, beta: &Composition) -> u64 {
        self.counts[alpha.descent_mask() as usize * self.side() + beta.descent_mask() as usize]
    }

    /// Row `α`, with columns in descent-mask order.
    pub fn row(&self, alpha: &Composition) -> &[u64] {
        let side = self.side();
        let start = alpha.descent_mask() as usize * side;
        &self.counts[start..start + side]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Worker count from `RIBBON_WORKERS`, falling back to the available
/// parallelism.
pub fn workers_from_env() -> usize {
    std::env::var("RIBBON_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |p| p.get()))
}

pub fn descent_pair_matrix(n: usize, workers: usize) -> Result<DescentPairMatrix> {
    descent_pair_matrix_bounded(n, workers, DESCENT_MATRIX_LIMIT)
}

/// Enumerates `S_n` in lexicographic order, split across workers by the
/// first entry.
pub fn descent_pair_matrix_bounded(n: usize, workers: usize, limit: usize) -> Result<DescentPairMatrix> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    Error::check_bound("n", n, limit)?;
    let side = 1usize << (n - 1);
    let workers = workers.clamp(1, n);
    let partials: Vec<Vec<u64>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut counts = vec![0u64; side * side];
                    for first in (1..=n).skip(w).step_by(workers) {
                        count_with_first(n, first, &mut counts);
                    }
                    counts
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut counts = vec![0u64; side * side];
    for part in partials {
        for (acc, k) in counts.iter_mut().zip(part) {
            *acc += k;
        }
    }
    Ok(DescentPairMatrix { n, counts })
}

fn count_with_first(n: usize, first: usize, counts: &mut [u64]) {
    let side = 1usize << (n - 1);
    let mut perm: Vec<usize> = std::iter::once(first).chain((1..=n).filter(|&v| v != first)).collect();
    let mut pos = vec![0usize; n + 1];
    loop {
        let mut d = 0usize;
        for i in 1..n {
            if perm[i - 1] > perm[i] {
                d |= 1 << (i - 1);
            }
        }
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut d_inv = 0usize;
        for v in 1..n {
            if pos[v + 1] < pos[v] {
                d_inv |= 1 << (v - 1);
            }
        }
        counts[d * side + d_inv] += 1;
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
}
