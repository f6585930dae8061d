//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// Partition of a type-A weight given in fundamental coordinates.
pub fn partition(lambda: &[i64]) -> Vec<i64> {
    (0..lambda.len()).map(|i| lambda[i..].iter().sum()).collect()
}

/// `dim V(λ)` for `A_n` by the hook-content formula.
pub fn dim_type_a(lambda: &[i64]) -> u64 {
    let n = lambda.len() as i64 + 1;
    let p = partition(lambda);
    let conj = |c: i64| p.iter().filter(|&&r| r > c).count() as i64;
    let (mut num, mut den) = (Q::one(), Q::one());
    for (r, &len) in p.iter().enumerate() {
        for c in 0..len {
            num *= q(n + c - r as i64);
            den *= q((len - c - 1) + (conj(c) - r as i64 - 1) + 1);
        }
    }
    let v = num / den;
    assert!(v.is_integer());
    v.to_integer().try_into().unwrap()
}

/// `dim V(aω1 + bω2)` for `C2` with `α1` short.
pub fn dim_c2(a: i64, b: i64) -> u64 {
    ((a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6) as u64
}

/// Solves a square system exactly; `None` if singular.
fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..=n {
                    let v = &m[c][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Vertices of `{x : A x ≤ b}` by solving every square subsystem.
pub fn brute_vertices(a: &[Vec<Q>], b: &[Q]) -> BTreeSet<Vec<Q>> {
    let d = a[0].len();
    let k = a.len();
    let feasible = |x: &[Q]| {
        a.iter()
            .zip(b)
            .all(|(row, bi)| row.iter().zip(x).fold(Q::zero(), |s, (u, v)| s + u * v) <= *bi)
    };
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let sa: Vec<Vec<Q>> = idx.iter().map(|&i| a[i].clone()).collect();
        let sb: Vec<Q> = idx.iter().map(|&i| b[i].clone()).collect();
        if let Some(x) = solve(&sa, &sb) {
            if feasible(&x) {
                out.insert(x);
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < k - d + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Integer points of `{x : A x ≤ b}` inside the box `[0, m]^d`.
pub fn brute_lattice_points(a: &[Vec<i64>], b: &[i64], m: i64) -> Vec<Vec<i64>> {
    let d = a[0].len();
    let mut out = Vec::new();
    let mut x = vec![0i64; d];
    loop {
        if a.iter().zip(b).all(|(row, &bi)| row.iter().zip(&x).map(|(u, v)| u * v).sum::<i64>() <= bi) {
            out.push(x.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < m {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}
