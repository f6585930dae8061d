//! Incremental double description on primitive integer vectors.
//!
//! Computes generators of `{x ∈ ℝ^d : E x = 0, A x ≥ 0}`. Equations only ever
//! shrink the lineality space, so they are applied first; inequalities are
//! then inserted in lexicographic order and every new ray is produced from a
//! pair of adjacent rays (combinatorial adjacency test).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bitset::BitSet;
use super::rat::{int_dot, make_primitive, sign};

#[derive(Clone, Debug)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

pub(crate) fn cone_generators(
    dim: usize,
    ineqs: &[Vec<BigInt>],
    eqs: &[Vec<BigInt>],
) -> ConeGenerators {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();

    for a in eqs {
        if let Some(p) = lineality.iter().position(|l| !int_dot(a, l).is_zero()) {
            let l0 = lineality.swap_remove(p);
            let a0 = int_dot(a, &l0);
            for l in lineality.iter_mut() {
                let al = int_dot(a, l);
                if !al.is_zero() {
                    *l = combine(&a0, l, &al, &l0);
                }
            }
        }
    }
    let space_dim = lineality.len();

    let mut rows: Vec<&Vec<BigInt>> = ineqs.iter().filter(|r| !r.iter().all(Zero::is_zero)).collect();
    rows.sort();
    rows.dedup();

    let nrows = rows.len();
    let mut rays: Vec<Ray> = Vec::new();
    for (k, a) in rows.iter().enumerate() {
        if let Some(p) = lineality.iter().position(|l| !int_dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(p);
            let mut a0 = int_dot(a, &l0);
            if a0 < BigInt::zero() {
                for x in l0.iter_mut() {
                    *x = -&*x;
                }
                a0 = -a0;
            }
            for l in lineality.iter_mut() {
                let al = int_dot(a, l);
                if !al.is_zero() {
                    *l = combine(&a0, l, &al, &l0);
                }
            }
            for r in rays.iter_mut() {
                let ar = int_dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&a0, &r.v, &ar, &l0);
                }
                r.zeros.insert(k);
            }
            let mut zeros = BitSet::new(nrows);
            for j in 0..k {
                zeros.insert(j);
            }
            rays.push(Ray { v: l0, zeros });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| int_dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| sign(&vals[i]) > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| sign(&vals[i]) < 0).collect();
        if neg.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pointed_dim = space_dim - lineality.len();
        let min_common = pointed_dim.saturating_sub(2);
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                if rays[p].zeros.intersection_len(&rays[n].zeros) < min_common {
                    continue;
                }
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                let blocked = rays.iter().enumerate().any(|(i, r)| {
                    i != p && i != n && common.is_subset(&r.zeros)
                });
                if blocked {
                    continue;
                }
                // vals[p] > 0 > vals[n]: positive combination vanishing on a.
                let v = combine(&vals[p], &rays[n].v, &vals[n], &rays[p].v);
                let mut zeros = common;
                zeros.insert(k);
                fresh.push(Ray { v, zeros });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            match sign(&vals[i]) {
                1 => next.push(r),
                0 => {
                    r.zeros.insert(k);
                    next.push(r);
                }
                _ => {}
            }
        }
        next.extend(fresh);
        rays = next;
    }

    let mut rays: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    rays.sort();
    rays.dedup();
    for l in lineality.iter_mut() {
        canonical_line(l);
    }
    lineality.sort();
    ConeGenerators { rays, lineality }
}

/// `s·x − t·y`, reduced to a primitive vector.
fn combine(s: &BigInt, x: &[BigInt], t: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = x.iter().zip(y).map(|(xi, yi)| s * xi - t * yi).collect();
    make_primitive(&mut v);
    v
}

fn canonical_line(l: &mut [BigInt]) {
    make_primitive(l);
    if let Some(first) = l.iter().find(|x| !x.is_zero()) {
        if first < &BigInt::zero() {
            for x in l.iter_mut() {
                *x = -&*x;
            }
        }
    }
}
