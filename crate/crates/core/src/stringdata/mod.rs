//! String cones, the λ-inequalities cutting them down to string polytopes,
//! and the constructions built on top: fans, fibers, moment polytopes and
//! the worked example suite.

mod census;
mod checks;
mod cones;
mod fans;
mod file;
mod gt;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{
    facet_reduce, is_integral, rat, ConeH, Description, HPolyhedron, Halfspace,
    LatticeEnumerator, Rat, VPolytope,
};
use crate::rootdata::{ReducedWord, RootSystem, Weight};

pub use census::{census, census_of_cones, census_row, CensusRow, CensusSummary};
pub use checks::{
    anticanonical_check, e6_counterexample, e6_suffix_cone, e6_suffix_polytope, hw_tangent_cone_check,
    origin_tangent_cone, AnticanonicalReport, E6Report, TangentConeReport, E6_SUFFIX,
};
pub use cones::{
    c2_cone, certify_by_counts, gt_cone, EXTERNAL_CERT_BOUND, string_cone, weight_box, CountCertificate, Provider,
};
pub use fans::{
    minkowski_test, moment_polytope_limit, spherical_limit_cone, string_fan, string_fan_with_budget,
};
pub use file::{parse_cone_file, write_cone_file};
pub use gt::{
    gt_change_of_coords, gt_position, gt_renaming_table, gt_vertices, partition_to_weight,
    weight_to_partition, GtDirection,
};

/// Where a string cone's inequalities came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    #[serde(rename = "builtin-GT-A")]
    BuiltinGtA,
    #[serde(rename = "builtin-C2")]
    BuiltinC2,
    #[serde(rename = "builtin-E6-suffix")]
    BuiltinE6Suffix,
    ExternalFile { path: String, trusted: bool, certified: bool },
    EmpiricalCertified { degree: u32 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::BuiltinGtA => write!(f, "builtin-GT-A"),
            Provenance::BuiltinC2 => write!(f, "builtin-C2"),
            Provenance::BuiltinE6Suffix => write!(f, "builtin-E6-suffix"),
            Provenance::ExternalFile { path, trusted, certified } => {
                write!(f, "external-file({path}")?;
                if *certified {
                    write!(f, ", certified")?;
                }
                if *trusted {
                    write!(f, ", trusted")?;
                }
                write!(f, ")")
            }
            Provenance::EmpiricalCertified { degree } => write!(f, "empirical-certified(d={degree})"),
        }
    }
}

/// A string cone for a reduced word. The cone lives on the coordinates of
/// the positions `offset..N` of the word (all of them unless a builtin only
/// describes a suffix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringCone {
    rs: RootSystem,
    word: ReducedWord,
    offset: usize,
    cone: ConeH,
    provenance: Provenance,
}

impl StringCone {
    /// Wraps a cone after checking the word and facet-reducing the rows.
    pub fn new(
        rs: RootSystem,
        word: ReducedWord,
        offset: usize,
        cone: ConeH,
        provenance: Provenance,
    ) -> Result<Self> {
        rs.require_reduced(&word)?;
        let dim = word.len() - offset;
        if cone.dim() != dim {
            return Err(Error::DimMismatch {
                expected: dim,
                found: cone.dim(),
            });
        }
        let cone = ConeH::new(facet_reduce(cone.as_h())?)?;
        Ok(StringCone {
            rs,
            word,
            offset,
            cone,
            provenance,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Letters of the positions the cone lives on.
    pub fn active_letters(&self) -> &[usize] {
        &self.word.letters()[self.offset..]
    }

    pub fn dim(&self) -> usize {
        self.word.len() - self.offset
    }

    pub fn cone(&self) -> &ConeH {
        &self.cone
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn set_provenance(&mut self, p: Provenance) {
        self.provenance = p;
    }

    pub fn lambda_inequalities(&self, lambda: &Weight) -> HPolyhedron {
        lambda_rows(&self.rs, self.active_letters(), lambda)
    }

    pub fn polytope(&self, lambda: &Weight) -> Result<StringPolytope> {
        string_polytope(self, lambda)
    }

    /// Homogeneous cone on `(λ, t)` whose slice at `λ` is `Q(λ)`.
    pub fn big_cone(&self) -> ConeH {
        big_cone(self)
    }

    /// `q_{λ*} = (⟨λ*, β_k∨⟩)_k`, restricted to the active positions.
    pub fn highest_weight_vertex(&self, lambda: &Weight) -> Vec<Rat> {
        let full = highest_weight_vertex(&self.rs, &self.word, lambda).expect("word checked at construction");
        full[self.offset..].to_vec()
    }

    pub fn pi_lambda(&self, lambda: &Weight, t: &[Rat]) -> Weight {
        pi_lambda_letters(&self.rs, self.active_letters(), lambda, t)
    }
}

/// Rows `t_k + Σ_{l>k} ⟨α_{i_l}, α_{i_k}∨⟩ t_l ≤ ⟨λ, α_{i_k}∨⟩` over the
/// given letters.
fn lambda_rows(rs: &RootSystem, letters: &[usize], lambda: &Weight) -> HPolyhedron {
    let n = letters.len();
    let mut h = HPolyhedron::new(n);
    for k in 0..n {
        let ik = letters[k] - 1;
        let mut a = vec![Rat::zero(); n];
        a[k] = rat(1);
        for l in k + 1..n {
            a[l] = rat(rs.cartan_int(ik, letters[l] - 1));
        }
        h.push_ineq(a, lambda.coords[ik].clone());
    }
    h
}

/// The λ-inequalities of a reduced word.
pub fn lambda_inequalities(rs: &RootSystem, word: &ReducedWord, lambda: &Weight) -> Result<HPolyhedron> {
    rs.require_reduced(word)?;
    check_rank(rs, lambda)?;
    Ok(lambda_rows(rs, word.letters(), lambda))
}

fn check_rank(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    Ok(())
}

/// `q_{λ*}` for the full word.
pub fn highest_weight_vertex(rs: &RootSystem, word: &ReducedWord, lambda: &Weight) -> Result<Vec<Rat>> {
    check_rank(rs, lambda)?;
    let dual = rs.dual_weight(lambda);
    rs.beta_sequence(word)?.iter().map(|b| rs.pairing(&dual, b)).collect()
}

fn pi_lambda_letters(rs: &RootSystem, letters: &[usize], lambda: &Weight, t: &[Rat]) -> Weight {
    let mut c: Vec<Rat> = lambda.coords.iter().map(|x| -x).collect();
    for (tk, &l) in t.iter().zip(letters) {
        if tk.is_zero() {
            continue;
        }
        for (m, cm) in c.iter_mut().enumerate() {
            *cm += tk * rat(rs.cartan_int(m, l - 1));
        }
    }
    Weight::new(c)
}

/// `π_λ(t) = −λ + Σ t_k α_{i_k}` in fundamental coordinates.
pub fn pi_lambda(rs: &RootSystem, word: &ReducedWord, lambda: &Weight, t: &[Rat]) -> Result<Weight> {
    if t.len() != word.len() {
        return Err(Error::DimMismatch {
            expected: word.len(),
            found: t.len(),
        });
    }
    check_rank(rs, lambda)?;
    Ok(pi_lambda_letters(rs, word.letters(), lambda, t))
}

fn big_cone(c: &StringCone) -> ConeH {
    let r = c.rs.rank();
    let n = c.dim();
    let letters = c.active_letters();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..r {
        let mut a = vec![Rat::zero(); r + n];
        a[i] = rat(-1);
        rows.push(a);
    }
    for row in &c.cone.as_h().ineqs {
        let mut a = vec![Rat::zero(); r];
        a.extend(row.a.iter().cloned());
        rows.push(a);
    }
    for k in 0..n {
        let ik = letters[k] - 1;
        let mut a = vec![Rat::zero(); r + n];
        a[ik] = rat(-1);
        a[r + k] = rat(1);
        for l in k + 1..n {
            a[r + l] = rat(c.rs.cartan_int(ik, letters[l] - 1));
        }
        rows.push(a);
    }
    let mut cone = ConeH::from_normals(r + n, rows).expect("rows have the right length");
    if !c.cone.as_h().eqs.is_empty() {
        cone = cone.with_equations(c.cone.as_h().eqs.iter().map(|e| {
            let mut a = vec![Rat::zero(); r];
            a.extend(e.a.iter().cloned());
            a
        }));
    }
    cone
}

/// `Q(λ)`: the string cone cut by the λ-inequalities.
#[derive(Debug)]
pub struct StringPolytope {
    cone: StringCone,
    lambda: Weight,
    hform: HPolyhedron,
    description: OnceLock<Description>,
}

impl Clone for StringPolytope {
    fn clone(&self) -> Self {
        StringPolytope {
            cone: self.cone.clone(),
            lambda: self.lambda.clone(),
            hform: self.hform.clone(),
            description: self.description.clone(),
        }
    }
}

pub fn string_polytope(cone: &StringCone, lambda: &Weight) -> Result<StringPolytope> {
    check_rank(&cone.rs, lambda)?;
    lambda.require_dominant()?;
    let hform = cone.cone.as_h().intersect(&cone.lambda_inequalities(lambda))?;
    Ok(StringPolytope {
        cone: cone.clone(),
        lambda: lambda.clone(),
        hform,
        description: OnceLock::new(),
    })
}

impl StringPolytope {
    pub fn cone(&self) -> &StringCone {
        &self.cone
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Cone rows followed by the λ-inequalities (not reduced).
    pub fn hform(&self) -> &HPolyhedron {
        &self.hform
    }

    /// Irredundant description with vertices; computed once.
    pub fn describe(&self) -> Result<&Description> {
        if let Some(d) = self.description.get() {
            return Ok(d);
        }
        let d = self.hform.describe()?;
        if !d.v.is_bounded() {
            return Err(Error::Unbounded);
        }
        Ok(self.description.get_or_init(|| d))
    }

    pub fn vertices(&self) -> Result<&VPolytope> {
        Ok(&self.describe()?.v)
    }

    pub fn facet_count(&self) -> Result<usize> {
        Ok(self.describe()?.facet_count())
    }

    pub fn vertex_count(&self) -> Result<usize> {
        Ok(self.describe()?.vertex_count())
    }

    pub fn is_integral(&self) -> Result<bool> {
        Ok(is_integral(self.vertices()?))
    }

    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        LatticeEnumerator::new(&self.hform)?.points()
    }

    pub fn lattice_count(&self) -> Result<u64> {
        LatticeEnumerator::new(&self.hform)?.count()
    }

    pub fn highest_weight_vertex(&self) -> Vec<Rat> {
        self.cone.highest_weight_vertex(&self.lambda)
    }

    pub fn pi(&self, t: &[Rat]) -> Weight {
        self.cone.pi_lambda(&self.lambda, t)
    }

    /// `Q(λ) ∩ π_λ⁻¹(μ)`.
    pub fn fiber(&self, mu: &Weight) -> Result<HPolyhedron> {
        fiber_polytope(self, mu)
    }
}

/// `poly ∩ {t : π_λ(t) = μ}`.
pub fn fiber_polytope(poly: &StringPolytope, mu: &Weight) -> Result<HPolyhedron> {
    let rs = &poly.cone.rs;
    check_rank(rs, mu)?;
    let letters = poly.cone.active_letters();
    let mut h = poly.hform.clone();
    for m in 0..rs.rank() {
        let a: Vec<Rat> = letters.iter().map(|&l| rat(rs.cartan_int(m, l - 1))).collect();
        h.eqs.push(Halfspace::new(a, &mu.coords[m] + &poly.lambda.coords[m]));
    }
    Ok(h)
}

/// For every `μ ∈ Wλ*`, the unique lattice point of `Q(λ)` over `μ`.
pub fn extremal_weight_vertices(poly: &StringPolytope) -> Result<BTreeMap<Weight, Vec<i64>>> {
    let rs = &poly.cone.rs;
    if !poly.lambda.is_integral() {
        return Err(Error::NotDominant(poly.lambda.coords.iter().map(|c| c.to_string()).collect()));
    }
    let dual = rs.dual_weight(&poly.lambda);
    let verts = poly.vertices()?;
    let mut out = BTreeMap::new();
    for mu in rs.weyl_orbit(&dual) {
        let pts = LatticeEnumerator::new(&fiber_polytope(poly, &mu)?)?.points()?;
        if pts.len() != 1 {
            return Err(Error::FiberNotSingleton(format!("{} lattice points over {mu}", pts.len())));
        }
        let p = pts.into_iter().next().unwrap();
        let as_rat: Vec<Rat> = p.iter().map(|&x| rat(x)).collect();
        if verts.vertices.binary_search(&as_rat).is_err() {
            return Err(Error::FiberNotSingleton(format!("point over {mu} is not a vertex")));
        }
        out.insert(mu, p);
    }
    Ok(out)
}

/// Helper for callers holding integer points.
pub fn to_rat(p: &[i64]) -> Vec<Rat> {
    p.iter().map(|&x| rat(x)).collect()
}

#[cfg(test)]
mod tests;
