//! Position types and the signed functions `g`, `h` of a composition.
//!
//! For `β ⊨ n` and `0 < i < n`, the type of `i` counts how many of `i` and
//! `n - i` lie in `S(β)`; the midpoint `n/2` counts double. The profile is
//! extended to all integers by reducing mod `n`, with multiples of `n` of
//! type 0.

use crate::composition::Composition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeProfile {
    n: usize,
    // index i-1 holds the value at position i, for i in 1..n
    types: Vec<u8>,
    g: Vec<i8>,
    h: Vec<i8>,
}

impl TypeProfile {
    pub fn of(beta: &Composition) -> Self {
        let n = beta.size();
        let s = beta.descent_set();
        let mut types = Vec::with_capacity(n.saturating_sub(1));
        let mut g = Vec::with_capacity(types.capacity());
        let mut h = Vec::with_capacity(types.capacity());
        for i in 1..n {
            let t = if 2 * i == n {
                2 * u8::from(s.contains(i))
            } else {
                u8::from(s.contains(i)) + u8::from(s.contains(n - i))
            };
            let hv: i8 = match t {
                0 => 0,
                1 if s.contains(i) => 1,
                1 => -1,
                _ => 2,
            };
            types.push(t);
            h.push(hv);
            g.push(if hv.abs() == 1 { hv } else { 0 });
        }
        TypeProfile { n, types, g, h }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Types at positions `1..n`.
    pub fn types(&self) -> &[u8] {
        &self.types
    }

    pub fn g_values(&self) -> &[i8] {
        &self.g
    }

    pub fn h_values(&self) -> &[i8] {
        &self.h
    }

    fn index(&self, x: i64) -> Option<usize> {
        let r = x.rem_euclid(self.n as i64) as usize;
        (r != 0).then(|| r - 1)
    }

    pub fn type_at(&self, x: i64) -> u8 {
        self.index(x).map_or(0, |i| self.types[i])
    }

    pub fn g_at(&self, x: i64) -> i8 {
        self.index(x).map_or(0, |i| self.g[i])
    }

    pub fn h_at(&self, x: i64) -> i8 {
        self.index(x).map_or(0, |i| self.h[i])
    }

    /// Whether `h(x) = h(x + p)` for every integer `x` not divisible by `p`.
    ///
    /// `h` has period `n`, so checking one period of `x` suffices.
    pub fn h_periodic_except_multiples(&self, p: usize) -> bool {
        if p == 0 {
            return false;
        }
        (1..=self.n as i64).filter(|x| x % p as i64 != 0).all(|x| self.h_at(x) == self.h_at(x + p as i64))
    }

    /// Render values at positions `1..=len` as `+`, `-`, `0`, `2`.
    pub fn render(values: impl IntoIterator<Item = i8>) -> String {
        values
            .into_iter()
            .map(|v| match v {
                1 => '+',
                -1 => '-',
                0 => '0',
                _ => '2',
            })
            .collect()
    }
}
