use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bitset::BitSet;
use super::dd::cone_generators;
use super::rat::{int_dot, int_rank, primitive_row, to_rat_vec, Rat};
use super::types::{HPolyhedron, Halfspace, VPolytope};
use crate::error::{Error, Result};

/// Both representations of one polyhedron, with the facet/generator incidence.
#[derive(Clone, Debug)]
pub struct Description {
    /// Irredundant inequalities (facets) and an independent set of equations.
    pub h: HPolyhedron,
    /// Vertices (minimal-face representatives), extreme rays and lineality.
    pub v: VPolytope,
    /// For facet `i`, the generators it contains: vertex indices first, then
    /// ray indices offset by the number of vertices.
    pub(crate) incidence: Vec<BitSet>,
}

impl Description {
    pub fn facet_count(&self) -> usize {
        self.h.ineqs.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.v.vertices.len()
    }

    /// Dimension of the polyhedron (not of the ambient space).
    pub fn affine_dim(&self) -> usize {
        self.h.dim() - self.h.eqs.len()
    }

    /// Indices of the vertices lying on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> Vec<usize> {
        let nv = self.v.vertices.len();
        self.incidence[i].iter().filter(|&g| g < nv).collect()
    }
}

pub(crate) struct Homogenized {
    pub gens: Vec<Vec<BigInt>>,
    pub n_vertices: usize,
    pub v: VPolytope,
}

pub(crate) fn homogenized_row(row: &Halfspace) -> Vec<BigInt> {
    let mut full = Vec::with_capacity(row.a.len() + 1);
    full.push(row.b.clone());
    full.extend(row.a.iter().map(|x| -x));
    primitive_row(&full)
}

pub(crate) fn generators(h: &HPolyhedron) -> Result<Homogenized> {
    let d = h.dim();
    let mut ineqs: Vec<Vec<BigInt>> = h.ineqs.iter().map(homogenized_row).collect();
    let mut x0 = vec![BigInt::zero(); d + 1];
    x0[0] = BigInt::one();
    ineqs.push(x0);
    let eqs: Vec<Vec<BigInt>> = h.eqs.iter().map(homogenized_row).collect();
    let g = cone_generators(d + 1, &ineqs, &eqs);

    let mut verts: Vec<(Vec<Rat>, Vec<BigInt>)> = Vec::new();
    let mut rays: Vec<(Vec<Rat>, Vec<BigInt>)> = Vec::new();
    for r in g.rays {
        if r[0].is_positive() {
            let x0 = Rat::from_integer(r[0].clone());
            let p: Vec<Rat> = r[1..].iter().map(|x| Rat::from_integer(x.clone()) / &x0).collect();
            verts.push((p, r));
        } else {
            rays.push((to_rat_vec(&r[1..]), r));
        }
    }
    if verts.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    verts.sort();
    rays.sort();
    let lineality: Vec<Vec<Rat>> = g.lineality.iter().map(|l| to_rat_vec(&l[1..])).collect();
    let n_vertices = verts.len();
    let mut gens = Vec::with_capacity(verts.len() + rays.len());
    gens.extend(verts.iter().map(|(_, g)| g.clone()));
    gens.extend(rays.iter().map(|(_, g)| g.clone()));
    let mut v = VPolytope::with_rays(
        d,
        verts.into_iter().map(|(p, _)| p).collect(),
        rays.into_iter().map(|(r, _)| r).collect(),
    );
    v.set_lineality(lineality);
    Ok(Homogenized { gens, n_vertices, v })
}

/// Computes both representations and removes every redundant row.
pub(crate) fn describe(h: &HPolyhedron) -> Result<Description> {
    let hom = generators(h)?;
    let ngens = hom.gens.len();

    let rows: Vec<Vec<BigInt>> = h.ineqs.iter().map(homogenized_row).collect();
    let tight: Vec<BitSet> = rows
        .iter()
        .map(|r| {
            let mut s = BitSet::new(ngens);
            for (gi, g) in hom.gens.iter().enumerate() {
                if int_dot(r, g).is_zero() {
                    s.insert(gi);
                }
            }
            s
        })
        .collect();

    // Equations: the given ones plus every inequality tight on all generators,
    // thinned to an independent family.
    let mut eq_candidates: Vec<Vec<BigInt>> = h.eqs.iter().map(homogenized_row).collect();
    let implicit: Vec<bool> = tight.iter().map(|t| t.len() == ngens).collect();
    for (i, r) in rows.iter().enumerate() {
        if implicit[i] {
            eq_candidates.push(r.clone());
        }
    }
    let mut kept_eqs: Vec<Vec<BigInt>> = Vec::new();
    for c in eq_candidates {
        if c[1..].iter().all(Zero::is_zero) {
            continue;
        }
        let mut trial = kept_eqs.clone();
        trial.push(c.clone());
        if int_rank(&mut trial) == kept_eqs.len() + 1 {
            kept_eqs.push(c);
        }
    }

    let nv = hom.n_vertices;
    let candidates: Vec<usize> = (0..rows.len())
        .filter(|&i| !implicit[i] && tight[i].iter().any(|g| g < nv))
        .collect();
    let mut facets: Vec<(Halfspace, BitSet)> = Vec::new();
    for &i in &candidates {
        let dominated = candidates.iter().any(|&j| {
            j != i && tight[i].is_subset(&tight[j]) && !tight[j].is_subset(&tight[i])
        });
        if dominated {
            continue;
        }
        let row = h.ineqs[i].normalized();
        match facets.iter_mut().find(|(_, t)| *t == tight[i]) {
            Some(existing) => {
                if row < existing.0 {
                    existing.0 = row;
                }
            }
            None => facets.push((row, tight[i].clone())),
        }
    }
    facets.sort();

    let eqs: Vec<Halfspace> = kept_eqs
        .iter()
        .map(|r| {
            let a: Vec<Rat> = r[1..].iter().map(|x| Rat::from_integer(-x)).collect();
            Halfspace::new(a, Rat::from_integer(r[0].clone())).normalized()
        })
        .collect();
    let incidence = facets.iter().map(|(_, t)| t.clone()).collect();
    let ineqs = facets.into_iter().map(|(r, _)| r).collect();
    Ok(Description {
        h: HPolyhedron::from_rows(h.dim(), ineqs, eqs)?,
        v: hom.v,
        incidence,
    })
}

/// Irredundant description of the same set: every inequality is a facet and
/// implicit equalities are moved into `eqs`.
pub fn facet_reduce(h: &HPolyhedron) -> Result<HPolyhedron> {
    Ok(describe(h)?.h)
}

impl HPolyhedron {
    /// Both representations plus incidence, with redundant rows removed.
    pub fn describe(&self) -> Result<Description> {
        describe(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::rat;

    fn row(a: &[i64], b: i64) -> Halfspace {
        Halfspace::new(a.iter().map(|&x| rat(x)).collect(), rat(b))
    }

    #[test]
    fn dominated_row_is_dropped() {
        let h = HPolyhedron::from_rows(1, vec![row(&[1], 1), row(&[1], 2)], vec![]).unwrap();
        let r = facet_reduce(&h).unwrap();
        assert_eq!(r.ineqs, vec![row(&[1], 1)]);
    }

    #[test]
    fn cube_with_duplicate_face() {
        let mut rows = Vec::new();
        for i in 0..3 {
            let mut e = [0i64; 3];
            e[i] = 1;
            rows.push(row(&e, 1));
            let m: Vec<i64> = e.iter().map(|x| -x).collect();
            rows.push(row(&m, 0));
        }
        rows.push(row(&[2, 0, 0], 2));
        let h = HPolyhedron::from_rows(3, rows, vec![]).unwrap();
        let d = describe(&h).unwrap();
        assert_eq!(d.facet_count(), 6);
        assert_eq!(d.vertex_count(), 8);
    }

    #[test]
    fn implicit_equation_extracted() {
        // x ≤ 0, -x ≤ 0, 0 ≤ y ≤ 1
        let h = HPolyhedron::from_rows(
            2,
            vec![row(&[1, 0], 0), row(&[-1, 0], 0), row(&[0, 1], 1), row(&[0, -1], 0)],
            vec![],
        )
        .unwrap();
        let r = facet_reduce(&h).unwrap();
        assert_eq!(r.eqs.len(), 1);
        assert_eq!(r.ineqs.len(), 2);
    }

    #[test]
    fn empty_is_reported() {
        let h = HPolyhedron::from_rows(1, vec![row(&[1], -1), row(&[-1], 0)], vec![]).unwrap();
        assert_eq!(facet_reduce(&h), Err(Error::EmptyPolyhedron));
    }
}
