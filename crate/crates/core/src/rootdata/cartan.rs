use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CartanType, RootVec};
use crate::error::{Error, Result};
use crate::exactgeom::{rat, Rat};

fn bond(c: &mut [Vec<i64>], i: usize, j: usize) {
    c[i][j] = -1;
    c[j][i] = -1;
}

/// Cartan matrix `C[i][j] = ⟨α_j, α_i∨⟩`. Bourbaki numbering, except E6,
/// which uses the chain 5–4–3–2–6 with node 1 attached to node 3.
pub(crate) fn cartan_matrix(t: CartanType, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnknownType(format!("{t}{n}"));
    let legal = match t {
        CartanType::A => n >= 1,
        CartanType::B | CartanType::C => n >= 2,
        CartanType::D => n >= 4,
        CartanType::E => (6..=8).contains(&n),
        CartanType::F => n == 4,
        CartanType::G => n == 2,
    };
    if !legal {
        return Err(bad());
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match t {
        CartanType::A => (0..n - 1).for_each(|i| bond(&mut c, i, i + 1)),
        CartanType::B => {
            (0..n - 1).for_each(|i| bond(&mut c, i, i + 1));
            // α_n short
            c[n - 1][n - 2] = -2;
        }
        CartanType::C => {
            (0..n - 1).for_each(|i| bond(&mut c, i, i + 1));
            // α_n long
            c[n - 2][n - 1] = -2;
        }
        CartanType::D => {
            (0..n - 2).for_each(|i| bond(&mut c, i, i + 1));
            bond(&mut c, n - 3, n - 1);
        }
        CartanType::E if n == 6 => {
            for (a, b) in [(5, 4), (4, 3), (3, 2), (2, 6), (1, 3)] {
                bond(&mut c, a - 1, b - 1);
            }
        }
        CartanType::E => {
            bond(&mut c, 0, 2);
            bond(&mut c, 1, 3);
            (2..n - 1).for_each(|i| bond(&mut c, i, i + 1));
        }
        CartanType::F => {
            bond(&mut c, 0, 1);
            bond(&mut c, 1, 2);
            bond(&mut c, 2, 3);
            c[2][1] = -2;
        }
        CartanType::G => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    Ok(c)
}

pub(crate) fn validate(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    let ok = c.iter().all(|r| r.len() == n)
        && (0..n).all(|i| c[i][i] == 2)
        && (0..n).all(|i| (0..n).all(|j| i == j || (c[i][j] <= 0 && (c[i][j] == 0) == (c[j][i] == 0))));
    if ok {
        Ok(())
    } else {
        Err(Error::UnknownType("not a Cartan matrix".into()))
    }
}

/// Smallest positive integers `d` with `d_i C[i][j] = d_j C[j][i]`.
pub(crate) fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && c[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * rat(c[i][j]) / rat(c[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
    let l = d.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d
        .iter()
        .map(|x| {
            let v = x * Rat::from_integer(l.clone());
            num_traits::ToPrimitive::to_i64(&v.to_integer()).unwrap()
        })
        .collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

/// Positive roots by root-string extension from the simple roots, sorted by
/// height and then lexicographically.
pub(crate) fn positive_roots(c: &[Vec<i64>]) -> Vec<RootVec> {
    let n = c.len();
    let pair = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| c[i][j] * beta[j]).sum() };
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    roots.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // p = how far the α_i-string extends downward from β.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pair(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    let mut out: Vec<RootVec> = roots.into_iter().map(RootVec::new).collect();
    out.sort_by(|a, b| (a.height(), &a.coords).cmp(&(b.height(), &b.coords)));
    out
}

/// Exact inverse by Gauss–Jordan elimination.
pub(crate) fn inverse(c: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = c.len();
    let mut m: Vec<Vec<Rat>> = c
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&x| rat(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrices are invertible");
        m.swap(col, p);
        let inv = Rat::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}
