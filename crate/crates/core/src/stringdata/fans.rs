use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};

use super::StringCone;
use crate::error::{Error, Result};
use crate::exactgeom::{
    common_refinement, convex_hull, face_generators, facet_reduce, rat, ConeH, Fan, HPolyhedron,
    Halfspace, Rat, VPolytope, DEFAULT_FACE_BUDGET,
};
use crate::rootdata::Weight;

fn dominant_chamber(r: usize) -> ConeH {
    ConeH::from_normals(
        r,
        (0..r)
            .map(|i| {
                let mut a = vec![Rat::zero(); r];
                a[i] = rat(-1);
                a
            })
            .collect(),
    )
    .expect("rows have length r")
}

/// The fan over the dominant chamber on whose cones `λ ↦ Q(λ)` is
/// Minkowski-linear: projections of all faces of the big cone, refined.
pub fn string_fan(cone: &StringCone) -> Result<Fan> {
    string_fan_with_budget(cone, DEFAULT_FACE_BUDGET)
}

pub fn string_fan_with_budget(cone: &StringCone, budget: u64) -> Result<Fan> {
    let r = cone.root_system().rank();
    let big = cone.big_cone();
    let mut seen: BTreeSet<Vec<Halfspace>> = BTreeSet::new();
    let mut projected = Vec::new();
    for face in face_generators(&big, budget)? {
        // The image of a face is generated by the images of its generators.
        let rays: Vec<Vec<Rat>> = face.rays.iter().map(|g| g[..r].to_vec()).filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        let lin: Vec<Vec<Rat>> = face.lineality.iter().map(|g| g[..r].to_vec()).filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        let mut v = VPolytope::with_rays(r, vec![vec![Rat::zero(); r]], rays);
        v.lineality = lin;
        let h = convex_hull(&v)?;
        let mut key = h.ineqs.clone();
        key.extend(h.eqs.iter().map(|e| Halfspace::new(e.a.clone(), rat(1))));
        key.sort();
        if seen.insert(key) {
            projected.push(ConeH::new(h)?);
        }
    }
    common_refinement(&projected, &dominant_chamber(r))
}

/// True iff `Q(λ+μ) = Q(λ) + Q(μ)`.
pub fn minkowski_test(cone: &StringCone, lambda: &Weight, mu: &Weight) -> Result<bool> {
    let sum = cone.polytope(&lambda.add(mu))?;
    let p = cone.polytope(lambda)?;
    let q = cone.polytope(mu)?;
    // Q(λ)+Q(μ) ⊆ Q(λ+μ) always holds, so it suffices that every vertex of the
    // right side is a sum of vertices.
    let pv = &p.vertices()?.vertices;
    let qv = &q.vertices()?.vertices;
    let mut sums: HashSet<Vec<Rat>> = HashSet::with_capacity(pv.len() * qv.len());
    for a in pv {
        for b in qv {
            sums.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    Ok(sum.vertices()?.vertices.iter().all(|v| sums.contains(v)))
}

fn check_in_chamber(points: &[Vec<Rat>]) -> Result<()> {
    if points.iter().all(|p| p.iter().all(|x| !x.is_negative())) {
        Ok(())
    } else {
        Err(Error::ChamberViolation)
    }
}

/// `(wc × ℝ^N) ∩ C`, where `C` is the big cone on `(λ, t)`.
pub fn spherical_limit_cone(cone: &StringCone, wc: &ConeH) -> Result<ConeH> {
    let r = cone.root_system().rank();
    if wc.dim() != r {
        return Err(Error::DimMismatch {
            expected: r,
            found: wc.dim(),
        });
    }
    let g = crate::exactgeom::dd_convert(wc.as_h())?;
    check_in_chamber(&g.rays)?;
    if !g.lineality.is_empty() {
        return Err(Error::ChamberViolation);
    }
    let n = cone.dim();
    let lift = |row: &Halfspace| {
        let mut a = row.a.clone();
        a.extend(std::iter::repeat(Rat::zero()).take(n));
        Halfspace::new(a, Rat::zero())
    };
    let mut h = cone.big_cone().into_h();
    h.ineqs.extend(wc.as_h().ineqs.iter().map(lift));
    h.eqs.extend(wc.as_h().eqs.iter().map(lift));
    ConeH::new(facet_reduce(&h)?)
}

/// `{(λ, t) : λ ∈ P, t ∈ Q(λ*)}` for a polytope `P` in the dominant chamber.
pub fn moment_polytope_limit(cone: &StringCone, p: &VPolytope) -> Result<HPolyhedron> {
    let rs = cone.root_system();
    let r = rs.rank();
    if p.dim() != r {
        return Err(Error::DimMismatch {
            expected: r,
            found: p.dim(),
        });
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    check_in_chamber(&p.vertices)?;
    let n = cone.dim();
    // Column j of the duality map is ω_j*.
    let dual_cols: Vec<Vec<Rat>> = (1..=r).map(|j| rs.dual_weight(&Weight::fundamental(r, j)).coords).collect();
    let mut out = HPolyhedron::new(r + n);
    let hull = convex_hull(p)?;
    let lift = |row: &Halfspace| {
        let mut a = row.a.clone();
        a.extend(std::iter::repeat(Rat::zero()).take(n));
        Halfspace::new(a, row.b.clone())
    };
    out.ineqs.extend(hull.ineqs.iter().map(lift));
    out.eqs.extend(hull.eqs.iter().map(lift));
    let compose = |row: &Halfspace| {
        let mut a: Vec<Rat> = (0..r)
            .map(|j| (0..r).map(|i| &row.a[i] * &dual_cols[j][i]).sum())
            .collect();
        a.extend(row.a[r..].iter().cloned());
        Halfspace::new(a, Rat::zero())
    };
    let big = cone.big_cone();
    out.ineqs.extend(big.as_h().ineqs.iter().map(compose));
    out.eqs.extend(big.as_h().eqs.iter().map(compose));
    Ok(out)
}
