use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bitset::BitSet;
use super::ops::convex_hull;
use super::rat::{primitive_row, to_rat_vec, Rat};
use super::reduce::{describe, Description};
use super::types::{ConeH, HPolyhedron, Halfspace, VPolytope};
use crate::error::{Error, Result};

/// Largest number of candidate faces examined by [`faces`].
pub const DEFAULT_FACE_BUDGET: u64 = 1 << 24;

/// A fan given by its maximal cones, each full-dimensional in the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    pub maximal_cones: Vec<ConeH>,
    /// Primitive integer point in the relative interior of each maximal cone.
    pub interior_rays: Vec<Vec<BigInt>>,
    pub support: ConeH,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.maximal_cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_cones.is_empty()
    }

    /// A single maximal cone covering the whole support.
    pub fn is_trivial(&self) -> bool {
        self.maximal_cones.len() == 1
    }
}

/// Every face of a cone, from the cone itself down to its lineality space,
/// each given by the cone's rows with the tight facets turned into equations.
pub fn faces(c: &ConeH) -> Result<Vec<ConeH>> {
    faces_with_budget(c, DEFAULT_FACE_BUDGET)
}

pub fn faces_with_budget(c: &ConeH, budget: u64) -> Result<Vec<ConeH>> {
    let (d, lattice) = face_lattice(c, budget)?;
    let nf = d.facet_count();
    let mut out = Vec::with_capacity(lattice.len());
    for (eq, _) in &lattice {
        let ineqs: Vec<Halfspace> = (0..nf).filter(|&i| !eq.contains(i)).map(|i| d.h.ineqs[i].clone()).collect();
        let mut eqs = d.h.eqs.clone();
        eqs.extend(eq.iter().map(|i| d.h.ineqs[i].clone()));
        out.push(ConeH::new(HPolyhedron::from_rows(c.dim(), ineqs, eqs)?)?);
    }
    Ok(out)
}

/// Generators of one face: extreme rays plus the cone's lineality.
#[derive(Clone, Debug)]
pub struct FaceGenerators {
    pub rays: Vec<Vec<Rat>>,
    pub lineality: Vec<Vec<Rat>>,
}

/// Every face of a cone as a set of generators (same order as [`faces`]).
pub fn face_generators(c: &ConeH, budget: u64) -> Result<Vec<FaceGenerators>> {
    let (d, lattice) = face_lattice(c, budget)?;
    let nv = d.v.vertices.len();
    Ok(lattice
        .iter()
        .map(|(_, g)| FaceGenerators {
            rays: g.iter().filter(|&i| i >= nv).map(|i| d.v.rays[i - nv].clone()).collect(),
            lineality: d.v.lineality.clone(),
        })
        .collect())
}

/// Faces as (tight facet set, generator set), sorted by tight facet set.
fn face_lattice(c: &ConeH, budget: u64) -> Result<(Description, Vec<(BitSet, BitSet)>)> {
    let d = describe(c.as_h())?;
    let nf = d.facet_count();
    let ngens = d.v.vertices.len() + d.v.rays.len();
    let closure = |gens: &BitSet| {
        let mut eq = BitSet::new(nf);
        for (i, inc) in d.incidence.iter().enumerate() {
            if gens.is_subset(inc) {
                eq.insert(i);
            }
        }
        eq
    };
    let gens_of = |eq: &BitSet| {
        let mut g = BitSet::full(ngens);
        for i in eq.iter() {
            g = g.intersection(&d.incidence[i]);
        }
        g
    };

    let top = BitSet::new(nf);
    let mut seen: BTreeMap<BitSet, BitSet> = BTreeMap::new();
    seen.insert(top.clone(), gens_of(&top));
    let mut queue = VecDeque::from([top]);
    let mut examined = 0u64;
    while let Some(eq) = queue.pop_front() {
        let g = seen[&eq].clone();
        for i in 0..nf {
            if eq.contains(i) {
                continue;
            }
            examined += 1;
            if examined > budget {
                return Err(Error::DimensionOverflow {
                    dim: c.dim(),
                    bound: budget as usize,
                });
            }
            let sub = g.intersection(&d.incidence[i]);
            let child = closure(&sub);
            if !seen.contains_key(&child) {
                seen.insert(child.clone(), gens_of(&child));
                queue.push_back(child);
            }
        }
    }
    let lattice = seen.into_iter().collect();
    Ok((d, lattice))
}

/// Sign-canonical primitive normal: first nonzero entry positive.
fn hyperplane(a: &[Rat]) -> Vec<BigInt> {
    let mut p = primitive_row(a);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in p.iter_mut() {
            *x = -x.clone();
        }
    }
    p
}

struct Cell {
    h: HPolyhedron,
    rays: Vec<Vec<Rat>>,
    lineality: Vec<Vec<Rat>>,
}

fn cell(h: HPolyhedron) -> Result<Option<Cell>> {
    match describe(&h) {
        Ok(d) => Ok(Some(Cell {
            rays: d.v.rays.clone(),
            lineality: d.v.lineality.clone(),
            h: d.h,
        })),
        Err(Error::EmptyPolyhedron) => Ok(None),
        Err(e) => Err(e),
    }
}

fn strictly_inside(c: &HPolyhedron, x: &[Rat]) -> bool {
    c.eqs.iter().all(|e| e.slack(x).is_zero()) && c.ineqs.iter().all(|r| r.slack(x).is_positive())
}

/// Coarsest fan on `support` in which every full-dimensional input cone is a
/// union of maximal cones.
pub fn common_refinement(cones: &[ConeH], support: &ConeH) -> Result<Fan> {
    let dim = support.dim();
    let sup = describe(support.as_h())?;
    let sup_dim = sup.affine_dim();

    let mut full: Vec<HPolyhedron> = Vec::new();
    for c in cones {
        if c.dim() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                found: c.dim(),
            });
        }
        let d = describe(c.as_h())?;
        let inside = d.v.rays.iter().all(|r| support.contains(r))
            && d.v.lineality.iter().all(|l| {
                let neg: Vec<Rat> = l.iter().map(|x| -x).collect();
                support.contains(l) && support.contains(&neg)
            });
        if !inside {
            return Err(Error::SupportMismatch);
        }
        if d.affine_dim() == sup_dim && !full.contains(&d.h) {
            full.push(d.h);
        }
    }

    let mut planes: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for c in &full {
        for r in &c.ineqs {
            planes.insert(hyperplane(&r.a));
        }
    }

    let mut cells = vec![cell(sup.h.clone())?.expect("support contains the origin")];
    for p in &planes {
        let a = to_rat_vec(p);
        let neg: Vec<Rat> = a.iter().map(|x| -x).collect();
        let mut next = Vec::with_capacity(cells.len() * 2);
        for c in cells {
            for normal in [&a, &neg] {
                let mut h = c.h.clone();
                h.push_ineq(normal.clone(), Rat::zero());
                if let Some(sub) = cell(h)? {
                    if sub.h.dim() - sub.h.eqs.len() == sup_dim {
                        next.push(sub);
                    }
                }
            }
        }
        cells = next;
    }

    // Merge cells covered by the same set of input cones.
    let mut groups: BTreeMap<Vec<usize>, (Vec<Vec<Rat>>, Vec<Vec<Rat>>)> = BTreeMap::new();
    for c in cells {
        let mut point = vec![Rat::zero(); dim];
        for r in &c.rays {
            for (p, x) in point.iter_mut().zip(r) {
                *p += x;
            }
        }
        let signature: Vec<usize> = (0..full.len()).filter(|&i| strictly_inside(&full[i], &point)).collect();
        let entry = groups.entry(signature).or_default();
        entry.0.extend(c.rays);
        entry.1 = c.lineality;
    }

    let mut maximal: Vec<(Vec<BigInt>, ConeH)> = Vec::new();
    for (rays, lineality) in groups.into_values() {
        let mut v = VPolytope::with_rays(dim, vec![vec![Rat::zero(); dim]], rays);
        v.set_lineality(lineality);
        let hull = convex_hull(&v)?;
        let d = describe(&hull)?;
        let mut point = vec![Rat::zero(); dim];
        for r in &d.v.rays {
            for (p, x) in point.iter_mut().zip(r) {
                *p += x;
            }
        }
        maximal.push((primitive_row(&point), ConeH::new(d.h)?));
    }
    maximal.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Fan {
        dim,
        interior_rays: maximal.iter().map(|m| m.0.clone()).collect(),
        maximal_cones: maximal.into_iter().map(|m| m.1).collect(),
        support: support.clone(),
    })
}
