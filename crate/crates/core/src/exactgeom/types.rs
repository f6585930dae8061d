use num_traits::{Signed, Zero};

use super::rat::{dot, Rat};
use crate::error::{Error, Result};

/// One row `a·x ≤ b` (or `a·x = b` when stored as an equation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub a: Vec<Rat>,
    pub b: Rat,
}

impl Halfspace {
    pub fn new(a: Vec<Rat>, b: Rat) -> Self {
        Halfspace { a, b }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.b - dot(&self.a, x)
    }

    pub fn is_trivial(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    /// Positive rescaling to a primitive integer row; keeps the half-space.
    pub fn normalized(&self) -> Halfspace {
        let mut full = self.a.clone();
        full.push(self.b.clone());
        let ints = super::rat::primitive_row(&full);
        let mut a: Vec<Rat> = ints.into_iter().map(Rat::from_integer).collect();
        let b = a.pop().unwrap();
        Halfspace { a, b }
    }
}

/// Inequality description `{x : a·x ≤ b for ineqs, a·x = b for eqs}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    pub ineqs: Vec<Halfspace>,
    pub eqs: Vec<Halfspace>,
}

impl HPolyhedron {
    pub fn new(dim: usize) -> Self {
        HPolyhedron {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn from_rows(dim: usize, ineqs: Vec<Halfspace>, eqs: Vec<Halfspace>) -> Result<Self> {
        for row in ineqs.iter().chain(&eqs) {
            if row.a.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    found: row.a.len(),
                });
            }
        }
        Ok(HPolyhedron { dim, ineqs, eqs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn push_ineq(&mut self, a: Vec<Rat>, b: Rat) {
        assert_eq!(a.len(), self.dim, "row length must match the ambient dimension");
        self.ineqs.push(Halfspace { a, b });
    }

    pub fn push_eq(&mut self, a: Vec<Rat>, b: Rat) {
        assert_eq!(a.len(), self.dim, "row length must match the ambient dimension");
        self.eqs.push(Halfspace { a, b });
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.ineqs.iter().all(|h| !h.slack(x).is_negative())
            && self.eqs.iter().all(|h| h.slack(x).is_zero())
    }

    /// Intersection with another polyhedron in the same space.
    pub fn intersect(&self, other: &HPolyhedron) -> Result<HPolyhedron> {
        if other.dim != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        out.ineqs.extend(other.ineqs.iter().cloned());
        out.eqs.extend(other.eqs.iter().cloned());
        Ok(out)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.ineqs.iter().chain(&self.eqs).all(|h| h.b.is_zero())
    }
}

/// Generator description: convex hull of `vertices` plus the cone of `rays`
/// plus the linear span of `lineality`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
    pub lineality: Vec<Vec<Rat>>,
}

impl VPolytope {
    pub fn new(dim: usize, vertices: Vec<Vec<Rat>>) -> Self {
        VPolytope {
            dim,
            vertices,
            rays: Vec::new(),
            lineality: Vec::new(),
        }
    }

    pub fn with_rays(dim: usize, vertices: Vec<Vec<Rat>>, rays: Vec<Vec<Rat>>) -> Self {
        VPolytope {
            dim,
            vertices,
            rays,
            lineality: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub(crate) fn set_lineality(&mut self, lineality: Vec<Vec<Rat>>) {
        self.lineality = lineality;
    }
}

/// A polyhedral cone: every row has right-hand side zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    h: HPolyhedron,
}

impl ConeH {
    pub fn new(h: HPolyhedron) -> Result<Self> {
        if !h.is_homogeneous() {
            return Err(Error::Parse(
                "cone rows must have zero right-hand side".into(),
            ));
        }
        Ok(ConeH { h })
    }

    /// The cone `{x : a·x ≤ 0 for every row}`.
    pub fn from_normals(dim: usize, normals: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = normals
            .into_iter()
            .map(|a| Halfspace::new(a, Rat::zero()))
            .collect();
        Ok(ConeH {
            h: HPolyhedron::from_rows(dim, rows, Vec::new())?,
        })
    }

    pub fn whole_space(dim: usize) -> Self {
        ConeH {
            h: HPolyhedron::new(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn as_h(&self) -> &HPolyhedron {
        &self.h
    }

    pub fn into_h(self) -> HPolyhedron {
        self.h
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.h.contains(x)
    }

    pub fn with_equations(&self, eqs: impl IntoIterator<Item = Vec<Rat>>) -> ConeH {
        let mut h = self.h.clone();
        for a in eqs {
            h.push_eq(a, Rat::zero());
        }
        ConeH { h }
    }
}
