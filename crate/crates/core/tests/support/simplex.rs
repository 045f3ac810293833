//! Dense two-phase simplex over exact rationals with Bland's rule, used as an
//! independent oracle for transport costs. Deliberately naive.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use ricci_core::Rational;

/// Minimizes `c·x` subject to `A x = b`, `x ≥ 0`. Returns `None` when infeasible.
pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<Rational> {
    let m = a.len();
    let n = c.len();
    // columns: n originals, m artificials, then rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Rational::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // phase 1: minimize the sum of artificials
    let mut phase1 = vec![Rational::zero(); n + m];
    for v in phase1.iter_mut().skip(n) {
        *v = Rational::one();
    }
    run(&mut t, &mut basis, &phase1, n + m);
    let infeasibility: Rational =
        basis.iter().zip(&t).filter(|(&j, _)| j >= n).map(|(_, r)| r[width - 1].clone()).sum();
    if !infeasibility.is_zero() {
        return None;
    }
    // drive zero-level artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut basis, i, j),
                None => {
                    t.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    run(&mut t, &mut basis, c, n);
    Some(basis.iter().zip(&t).map(|(&j, r)| &c[j] * &r[width - 1]).sum())
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], r: usize, col: usize) {
    let inv = Rational::one() / &t[r][col];
    for v in t[r].iter_mut() {
        *v = &*v * &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[col].is_zero() {
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
    }
    basis[r] = col;
}

/// Simplex iterations over the first `allowed` columns with Bland's rule.
fn run(t: &mut [Vec<Rational>], basis: &mut [usize], c: &[Rational], allowed: usize) {
    let width = t.first().map_or(0, |r| r.len());
    loop {
        // reduced cost c_j − c_B B⁻¹ A_j
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let z: Rational = basis.iter().zip(t.iter()).map(|(&b, row)| &c[b] * &row[j]).sum();
            (&c[j] - z).is_negative()
        });
        let Some(j) = entering else { return };
        let mut best: Option<(Rational, usize, usize)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[width - 1] / &row[j];
                let better = match &best {
                    None => true,
                    Some((r, _, bi)) => ratio < *r || (ratio == *r && basis[i] < *bi),
                };
                if better {
                    best = Some((ratio, i, basis[i]));
                }
            }
        }
        let (_, i, _) = best.expect("transport problems are bounded");
        pivot(t, basis, i, j);
    }
}

/// `W(μ, ν)` for finitely supported measures under the cost `d`, as a
/// transportation LP.
pub fn transport_cost(mu: &[(usize, Rational)], nu: &[(usize, Rational)], d: impl Fn(usize, usize) -> i64) -> Rational {
    let (p, q) = (mu.len(), nu.len());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, (_, m)) in mu.iter().enumerate() {
        let mut row = vec![Rational::zero(); p * q];
        for j in 0..q {
            row[i * q + j] = Rational::one();
        }
        a.push(row);
        b.push(m.clone());
    }
    for (j, (_, m)) in nu.iter().enumerate() {
        let mut row = vec![Rational::zero(); p * q];
        for i in 0..p {
            row[i * q + j] = Rational::one();
        }
        a.push(row);
        b.push(m.clone());
    }
    let c: Vec<Rational> = mu
        .iter()
        .flat_map(|(x, _)| nu.iter().map(|(y, _)| Rational::from_integer(d(*x, *y).into())).collect::<Vec<_>>())
        .collect();
    minimize(&a, &b, &c).expect("balanced transport is feasible")
}
