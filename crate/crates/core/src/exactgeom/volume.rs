use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bitset::BitSet;
use super::rat::{abs, determinant, matrix_rank, primitive_row, solve, to_rat_vec, Rat};
use super::ops::convex_hull;
use super::reduce::Description;
use super::types::{HPolyhedron, VPolytope};
use crate::error::{Error, Result};

/// Z-basis of `{x ∈ Z^n : rows·x = 0}`.
pub fn integer_kernel_basis(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // Column operations on `m`, mirrored on `u`, bring `m` to column echelon
    // form; the columns of `u` past the pivots span the kernel lattice.
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let col_op = |mat: &mut Vec<Vec<BigInt>>, j: usize, k: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt| {
        // (col j, col k) <- (a·col j + b·col k, c·col j + d·col k)
        for row in mat.iter_mut() {
            let x = row[j].clone();
            let y = row[k].clone();
            row[j] = a * &x + b * &y;
            row[k] = c * &x + d * &y;
        }
    };
    let mut pivot = 0;
    for r in 0..m.len() {
        if pivot == n {
            break;
        }
        for k in pivot + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let x = m[r][pivot].clone();
            let y = m[r][k].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            // [s, -y/g; t, x/g] has determinant 1.
            let yg = &y / &g;
            let xg = &x / &g;
            let neg_yg = -yg;
            col_op(&mut m, pivot, k, &s, &t, &neg_yg, &xg);
            col_op(&mut u, pivot, k, &s, &t, &neg_yg, &xg);
        }
        if !m[r][pivot].is_zero() {
            pivot += 1;
        }
    }
    let mut basis: Vec<Vec<BigInt>> = (pivot..n).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect();
    for b in basis.iter_mut() {
        if b.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in b.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    basis
}

/// Volume relative to the lattice of the affine hull: a unimodular simplex of
/// the hull has volume `1/k!`, a single point has volume 1.
pub fn volume(p: &VPolytope) -> Result<Rat> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    convex_hull(p)?.volume()
}

impl HPolyhedron {
    /// See [`volume`].
    pub fn volume(&self) -> Result<Rat> {
        volume_of(&self.describe()?)
    }
}

fn volume_of(d: &Description) -> Result<Rat> {
    if !d.v.is_bounded() {
        return Err(Error::Unbounded);
    }
    let n = d.h.dim();
    let eq_rows: Vec<Vec<BigInt>> = d.h.eqs.iter().map(|e| primitive_row(&e.a)).collect();
    let basis = integer_kernel_basis(&eq_rows, n);
    let k = basis.len();
    if k == 0 {
        return Ok(Rat::one());
    }

    // Coordinates of every vertex in the kernel basis, relative to vertex 0.
    let bcols: Vec<Vec<Rat>> = basis.iter().map(|b| to_rat_vec(b)).collect();
    let mut pick: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial: Vec<Vec<Rat>> = pick.iter().map(|&r| bcols.iter().map(|c| c[r].clone()).collect()).collect();
        trial.push(bcols.iter().map(|c| c[i].clone()).collect());
        if matrix_rank(&trial) == trial.len() {
            pick.push(i);
            if pick.len() == k {
                break;
            }
        }
    }
    let square: Vec<Vec<Rat>> = pick.iter().map(|&r| bcols.iter().map(|c| c[r].clone()).collect()).collect();
    let v0 = &d.v.vertices[0];
    let coords: Vec<Vec<Rat>> = d
        .v
        .vertices
        .iter()
        .map(|v| {
            let rhs: Vec<Rat> = pick.iter().map(|&r| &v[r] - &v0[r]).collect();
            solve(&square, &rhs).expect("basis rows are independent")
        })
        .collect();

    let all: Vec<usize> = (0..coords.len()).collect();
    let mut simplices = Vec::new();
    pull(&all, k, &d.incidence, &coords, &mut Vec::new(), &mut simplices);
    let mut total = Rat::zero();
    for s in &simplices {
        let m: Vec<Vec<Rat>> = s[1..]
            .iter()
            .map(|&i| coords[i].iter().zip(&coords[s[0]]).map(|(a, b)| a - b).collect())
            .collect();
        total += abs(&determinant(&m));
    }
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    Ok(total / Rat::from_integer(fact))
}

fn affine_rank(verts: &[usize], coords: &[Vec<Rat>]) -> usize {
    if verts.is_empty() {
        return 0;
    }
    let base = &coords[verts[0]];
    let diffs: Vec<Vec<Rat>> = verts[1..]
        .iter()
        .map(|&i| coords[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    matrix_rank(&diffs)
}

/// Pulling triangulation of the face spanned by `verts` (of dimension `dim`):
/// cone from its first vertex over the faces of codimension one that miss it.
fn pull(
    verts: &[usize],
    dim: usize,
    facets: &[BitSet],
    coords: &[Vec<Rat>],
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let apex = verts[0];
    prefix.push(apex);
    if dim == 0 {
        out.push(prefix.clone());
    } else {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let sub: Vec<usize> = verts.iter().copied().filter(|&v| f.contains(v)).collect();
            if sub.is_empty() || sub.contains(&apex) || seen.contains(&sub) {
                continue;
            }
            if affine_rank(&sub, coords) == dim - 1 {
                pull(&sub, dim - 1, facets, coords, prefix, out);
                seen.insert(sub);
            }
        }
    }
    prefix.pop();
}
