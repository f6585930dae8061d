use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bitset::BitSet;
use super::dd::cone_generators;
use super::lattice::lattice_points;
use super::rat::{dot, is_integer_vec, primitive_row, Rat};
use super::reduce::{describe, facet_reduce, generators};
use super::types::{HPolyhedron, Halfspace, VPolytope};
use crate::error::{Error, Result};

/// Largest ambient dimension accepted by [`dd_convert`].
pub const DEFAULT_MAX_DIM: usize = 40;

/// Vertices, extreme rays and lineality of an H-polyhedron; vertices are
/// lexicographically sorted.
pub fn dd_convert(h: &HPolyhedron) -> Result<VPolytope> {
    dd_convert_with_bound(h, DEFAULT_MAX_DIM)
}

pub fn dd_convert_with_bound(h: &HPolyhedron, max_dim: usize) -> Result<VPolytope> {
    if h.dim() > max_dim {
        return Err(Error::DimensionOverflow {
            dim: h.dim(),
            bound: max_dim,
        });
    }
    Ok(generators(h)?.v)
}

/// Irredundant inequality description of a generator description.
pub fn convex_hull(v: &VPolytope) -> Result<HPolyhedron> {
    if v.vertices.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let d = v.dim();
    let lift = |x0: Rat, x: &[Rat]| {
        let mut full = Vec::with_capacity(d + 1);
        full.push(x0);
        full.extend(x.iter().cloned());
        primitive_row(&full)
    };
    let mut rows: Vec<Vec<BigInt>> = v.vertices.iter().map(|p| lift(Rat::one(), p)).collect();
    rows.extend(v.rays.iter().map(|r| lift(Rat::zero(), r)));
    let eqs: Vec<Vec<BigInt>> = v.lineality.iter().map(|l| lift(Rat::zero(), l)).collect();
    let g = cone_generators(d + 1, &rows, &eqs);

    let to_row = |c: &Vec<BigInt>| {
        let a: Vec<Rat> = c[1..].iter().map(|x| Rat::from_integer(-x)).collect();
        Halfspace::new(a, Rat::from_integer(c[0].clone()))
    };
    let mut ineqs: Vec<Halfspace> = g
        .rays
        .iter()
        .filter(|c| !c[1..].iter().all(Zero::is_zero))
        .map(|c| to_row(c).normalized())
        .collect();
    ineqs.sort();
    let eqs = g.lineality.iter().map(|c| to_row(c).normalized()).collect();
    HPolyhedron::from_rows(d, ineqs, eqs)
}

/// Image under the coordinate projection onto `keep` (ascending indices),
/// by Fourier–Motzkin elimination with redundancy removal after each step.
pub fn project(h: &HPolyhedron, keep: &[usize]) -> Result<HPolyhedron> {
    let keep: BTreeSet<usize> = keep.iter().copied().collect();
    if let Some(&bad) = keep.iter().find(|&&k| k >= h.dim()) {
        return Err(Error::DimMismatch {
            expected: h.dim(),
            found: bad + 1,
        });
    }
    let mut cur = facet_reduce(h)?;
    // Original index of every current column.
    let mut cols: Vec<usize> = (0..h.dim()).collect();
    while let Some(pos) = (0..cols.len()).rev().find(|&c| !keep.contains(&cols[c])) {
        cur = eliminate(&cur, pos);
        cols.remove(pos);
        cur = facet_reduce(&cur)?;
    }
    Ok(cur)
}

/// Removes column `j` by substitution (if an equation involves it) or by
/// Fourier–Motzkin combination of the inequalities.
pub(crate) fn eliminate(h: &HPolyhedron, j: usize) -> HPolyhedron {
    let drop_col = |row: &Halfspace| {
        let mut a = row.a.clone();
        a.remove(j);
        Halfspace::new(a, row.b.clone())
    };
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    if let Some(p) = h.eqs.iter().position(|e| !e.a[j].is_zero()) {
        let pivot = &h.eqs[p];
        let sub = |row: &Halfspace| {
            let f = &row.a[j] / &pivot.a[j];
            let a: Vec<Rat> = row.a.iter().zip(&pivot.a).map(|(x, y)| x - &f * y).collect();
            Halfspace::new(a, &row.b - &f * &pivot.b)
        };
        for (i, e) in h.eqs.iter().enumerate() {
            if i != p {
                eqs.push(drop_col(&sub(e)));
            }
        }
        ineqs.extend(h.ineqs.iter().map(|r| drop_col(&sub(r))));
    } else {
        eqs.extend(h.eqs.iter().map(drop_col));
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in &h.ineqs {
            if r.a[j].is_positive() {
                pos.push(r);
            } else if r.a[j].is_negative() {
                neg.push(r);
            } else {
                ineqs.push(drop_col(r));
            }
        }
        for p in &pos {
            for n in &neg {
                let cp = -&n.a[j];
                let cn = p.a[j].clone();
                let a: Vec<Rat> = p.a.iter().zip(&n.a).map(|(x, y)| &cp * x + &cn * y).collect();
                let b = &cp * &p.b + &cn * &n.b;
                ineqs.push(drop_col(&Halfspace::new(a, b).normalized()));
            }
        }
    }
    HPolyhedron::from_rows(h.dim() - 1, ineqs, eqs).expect("column removed from every row")
}

/// `n·P`: scales every right-hand side. `n` must be positive.
pub fn dilate(h: &HPolyhedron, n: &Rat) -> HPolyhedron {
    assert!(n.is_positive(), "dilation factor must be positive");
    let mut out = h.clone();
    for row in out.ineqs.iter_mut().chain(out.eqs.iter_mut()) {
        row.b = &row.b * n;
    }
    out
}

/// True iff every vertex has integer coordinates.
pub fn is_integral(p: &VPolytope) -> bool {
    p.vertices.iter().all(|v| is_integer_vec(v))
}

/// Keeps the points that are vertices of their convex hull.
pub(crate) fn extreme_points(dim: usize, points: Vec<Vec<Rat>>) -> Result<Vec<Vec<Rat>>> {
    let mut pts: Vec<Vec<Rat>> = points;
    pts.sort();
    pts.dedup();
    if pts.len() <= 1 {
        return Ok(pts);
    }
    let hull = convex_hull(&VPolytope::new(dim, pts.clone()))?;
    let tight: Vec<BitSet> = pts
        .iter()
        .map(|p| {
            let mut s = BitSet::new(hull.ineqs.len());
            for (i, row) in hull.ineqs.iter().enumerate() {
                if row.slack(p).is_zero() {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let keep: Vec<Vec<Rat>> = pts
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !tight
                .iter()
                .enumerate()
                .any(|(j, t)| j != *i && tight[*i].is_subset(t))
        })
        .map(|(_, p)| p.clone())
        .collect();
    Ok(keep)
}

/// Minkowski sum of two polytopes.
pub fn minkowski_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    if p.dim() != q.dim() {
        return Err(Error::DimMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    if !p.is_bounded() || !q.is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    Ok(VPolytope::new(p.dim(), extreme_points(p.dim(), sums)?))
}

/// Polar dual `{y : y·(x − center) ≤ 1 for all x ∈ p}`.
pub fn polar_dual(p: &VPolytope, center: &[Rat]) -> Result<VPolytope> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let hull = convex_hull(p)?;
    if !hull.eqs.is_empty() {
        return Err(Error::NotFullDim);
    }
    let mut verts = Vec::with_capacity(hull.ineqs.len());
    for row in &hull.ineqs {
        let s = row.slack(center);
        if !s.is_positive() {
            return Err(Error::CenterNotInterior);
        }
        verts.push(row.a.iter().map(|x| x / &s).collect::<Vec<Rat>>());
    }
    verts.sort();
    Ok(VPolytope::new(p.dim(), verts))
}

/// Integral, exactly one interior lattice point, integral polar dual about it.
pub fn is_reflexive(p: &VPolytope) -> Result<bool> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let hull = convex_hull(p)?;
    if !hull.eqs.is_empty() {
        return Err(Error::NotFullDim);
    }
    if !is_integral(p) {
        return Ok(false);
    }
    let interior: Vec<Vec<Rat>> = lattice_points(&hull)?
        .into_iter()
        .map(|x| x.into_iter().map(|c| Rat::from_integer(BigInt::from(c))).collect::<Vec<Rat>>())
        .filter(|x| hull.ineqs.iter().all(|r| r.slack(x).is_positive()))
        .collect();
    if interior.len() != 1 {
        return Ok(false);
    }
    Ok(is_integral(&polar_dual(p, &interior[0])?))
}

impl HPolyhedron {
    /// Affine dimension of the (nonempty) polyhedron.
    pub fn affine_dim(&self) -> Result<usize> {
        Ok(describe(self)?.affine_dim())
    }

    pub fn max_of(&self, c: &[Rat]) -> Result<Option<Rat>> {
        let v = dd_convert(self)?;
        if v.rays.iter().any(|r| dot(c, r).is_positive())
            || v.lineality.iter().any(|r| !dot(c, r).is_zero())
        {
            return Ok(None);
        }
        Ok(v.vertices.iter().map(|x| dot(c, x)).max())
    }
}
