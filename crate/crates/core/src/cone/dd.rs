//! Extreme rays of a pointed cone `{x : A x ≥ 0}` with full-rank `A`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{dot_int, null_space, primitive, primitive_int, rank, to_rational};
use crate::rational::Rational;

/// Double description over `rows` in the given order.
///
/// Starts from the first `d` linearly independent rows, whose cone is
/// simplicial, then adds the remaining rows one at a time. Two rays are
/// combined only when the rows active at both have rank `d - 2`.
pub(crate) fn double_description(rows: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    let qrows: Vec<Vec<Rational>> = rows.iter().map(|r| to_rational(r)).collect();

    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for i in 0..rows.len() {
        if basis.len() == d {
            break;
        }
        let mut trial: Vec<Vec<Rational>> = basis.iter().map(|&j| qrows[j].clone()).collect();
        trial.push(qrows[i].clone());
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
    }
    assert_eq!(basis.len(), d, "inequality system must have full rank");

    let mut rays: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|&i| {
            let others: Vec<Vec<Rational>> = basis.iter().filter(|&&j| j != i).map(|&j| qrows[j].clone()).collect();
            let ns = null_space(&others, d);
            debug_assert_eq!(ns.len(), 1);
            let r = primitive(&ns[0]);
            if dot_int(&rows[i], &r).is_negative() {
                r.into_iter().map(|x| -x).collect()
            } else {
                r
            }
        })
        .collect();
    let mut processed = basis.clone();

    for i in (0..rows.len()).filter(|i| !basis.contains(i)) {
        let a = &rows[i];
        let values: Vec<BigInt> = rays.iter().map(|r| dot_int(a, r)).collect();
        let zero_sets: Vec<Vec<usize>> = rays
            .iter()
            .map(|r| processed.iter().copied().filter(|&j| dot_int(&rows[j], r).is_zero()).collect())
            .collect();
        let mut next: Vec<Vec<BigInt>> =
            rays.iter().zip(&values).filter(|(_, v)| !v.is_negative()).map(|(r, _)| r.clone()).collect();
        for p in (0..rays.len()).filter(|&p| values[p].is_positive()) {
            for q in (0..rays.len()).filter(|&q| values[q].is_negative()) {
                let common: Vec<usize> =
                    zero_sets[p].iter().copied().filter(|j| zero_sets[q].binary_search(j).is_ok()).collect();
                if common.len() + 2 < d {
                    continue;
                }
                let active: Vec<Vec<Rational>> = common.iter().map(|&j| qrows[j].clone()).collect();
                if rank(&active) != d - 2 {
                    continue;
                }
                let combined: Vec<BigInt> =
                    rays[q].iter().zip(&rays[p]).map(|(x, y)| &values[p] * x - &values[q] * y).collect();
                next.push(primitive_int(combined));
            }
        }
        rays = next;
        processed.push(i);
        processed.sort_unstable();
    }
    rays
}

/// Extreme rays by brute force: every `(d-1)`-subset of rows of rank
/// `d - 1` determines a line; keep the directions satisfying all rows.
pub(crate) fn facet_intersection(rows: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    let qrows: Vec<Vec<Rational>> = rows.iter().map(|r| to_rational(r)).collect();
    let mut found = BTreeSet::new();
    let mut subset = Vec::with_capacity(d - 1);
    subsets(rows.len(), d - 1, 0, &mut subset, &mut |chosen| {
        let sub: Vec<Vec<Rational>> = chosen.iter().map(|&j| qrows[j].clone()).collect();
        if rank(&sub) != d - 1 {
            return;
        }
        let ns = null_space(&sub, d);
        let r = primitive(&ns[0]);
        for cand in [r.clone(), r.into_iter().map(|x| -x).collect()] {
            if rows.iter().all(|a| !dot_int(a, &cand).is_negative()) {
                found.insert(cand);
            }
        }
    });
    found.into_iter().collect()
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        visit(cur);
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, visit);
        cur.pop();
    }
}
