//! Exact phase-one simplex for `A x = b, x ≥ 0`, using Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A nonnegative solution of `A x = b`, or `None` if there is none.
///
/// `a` is given row by row; every row must have the same length.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let width = k + m;
    // columns 0..k original, k..k+m artificial, last is the right-hand side
    let mut t: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let flip = rhs.is_negative();
            let mut r: Vec<Rational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
            r.extend((0..m).map(|j| if j == i { Rational::one() } else { Rational::zero() }));
            r.push(if flip { -rhs } else { rhs.clone() });
            r
        })
        .collect();
    let mut basis: Vec<usize> = (k..width).collect();

    loop {
        // reduced cost of column j under phase-one costs (1 on artificials)
        let reduced = |t: &[Vec<Rational>], basis: &[usize], j: usize| -> Rational {
            let cj = if j >= k { Rational::one() } else { Rational::zero() };
            let cb: Rational = (0..m).filter(|&i| basis[i] >= k).map(|i| t[i][j].clone()).sum();
            cj - cb
        };
        let Some(enter) = (0..width).find(|&j| !basis.contains(&j) && reduced(&t, &basis, j).is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, r, enter);
        basis[r] = enter;
    }

    let infeasibility: Rational = (0..m).filter(|&i| basis[i] >= k).map(|i| t[i][width].clone()).sum();
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &j) in basis.iter().enumerate() {
        if j < k {
            x[j] = t[i][width].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], r: usize, c: usize) {
    let inv = Rational::one() / &t[r][c];
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}
