use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{Provenance, StringCone, StringPolytope};
use crate::error::{Error, Result};
use crate::exactgeom::{
    dd_convert, is_integral, is_reflexive, primitive_row, rat, ConeH, HPolyhedron, Halfspace, Rat,
};
use crate::rootdata::{CartanType, ReducedWord, RootSystem, Weight};

/// Last 16 letters of the E6 word whose string cone is a product of a D5
/// cone and the cone built by [`e6_suffix_cone`].
pub const E6_SUFFIX: [usize; 16] = [6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6, 2, 3, 4, 5];

/// The 16-dimensional factor of the E6 string cone. `word` is either the
/// suffix alone (completed by the lexicographically first D5 word) or a full
/// reduced word ending in it.
pub fn e6_suffix_cone(rs: &RootSystem, word: &ReducedWord) -> Result<StringCone> {
    if rs.cartan_type() != CartanType::E || rs.rank() != 6 {
        return Err(Error::ProviderMismatch(format!("E6 suffix cone needs E6, got {}", rs.name())));
    }
    let suffix = ReducedWord::new(E6_SUFFIX.to_vec());
    let full = if *word == suffix {
        rs.parabolic_longest_word(&[1, 2, 3, 4, 5]).concat(&suffix)
    } else if word.len() == rs.n_positive() && word.letters().ends_with(&E6_SUFFIX) {
        word.clone()
    } else {
        return Err(Error::ProviderMismatch(format!("no builtin E6 cone for word {word}")));
    };
    // t_a ≥ t_b, coordinates counted from 1; b = 0 means t_a ≥ 0.
    let chains: [(usize, usize); 23] = [
        (1, 2),
        (2, 3),
        (3, 4),
        (3, 5),
        (4, 7),
        (5, 7),
        (7, 8),
        (7, 9),
        (8, 10),
        (9, 10),
        (10, 11),
        (10, 13),
        (11, 14),
        (13, 14),
        (14, 15),
        (15, 16),
        (16, 0),
        (5, 6),
        (6, 8),
        (8, 0),
        (9, 12),
        (12, 13),
        (13, 0),
    ];
    let rows = chains
        .iter()
        .map(|&(a, b)| {
            let mut row = vec![Rat::zero(); 16];
            row[a - 1] = rat(-1);
            if b > 0 {
                row[b - 1] = rat(1);
            }
            row
        })
        .collect();
    let cone = ConeH::from_normals(16, rows)?;
    StringCone::new(rs.clone(), full, rs.n_positive() - 16, cone, Provenance::BuiltinE6Suffix)
}

/// `Q'(λ)`: the E6 suffix cone cut by the λ-inequalities of the suffix.
pub fn e6_suffix_polytope(lambda: &Weight) -> Result<StringPolytope> {
    let rs = RootSystem::new(CartanType::E, 6)?;
    let cone = e6_suffix_cone(&rs, &ReducedWord::new(E6_SUFFIX.to_vec()))?;
    cone.polytope(lambda)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnticanonicalReport {
    pub integral: bool,
    /// Only decided when the polytope is integral.
    pub reflexive: Option<bool>,
    pub vertices: usize,
}

/// Integrality and reflexivity of `Q(2ρ)`.
pub fn anticanonical_check(cone: &StringCone) -> Result<AnticanonicalReport> {
    let r = cone.root_system().rank();
    let poly = cone.polytope(&Weight::rho(r).scale(&rat(2)))?;
    let v = poly.vertices()?;
    let integral = is_integral(v);
    let reflexive = if integral { Some(is_reflexive(v)?) } else { None };
    Ok(AnticanonicalReport {
        integral,
        reflexive,
        vertices: v.vertices.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E6Report {
    pub n: u32,
    pub integral: bool,
    pub vertices: usize,
    /// Least common multiple of the vertex denominators of `Q'(ρ)`.
    pub denominator_lcm: String,
}

/// Is `n·Q'(ρ) = Q'(nρ)` integral?
pub fn e6_counterexample(n: u32) -> Result<E6Report> {
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    let q = e6_suffix_polytope(&Weight::rho(6))?;
    let v = q.vertices()?;
    let lcm = v
        .vertices
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let integral = (BigInt::from(n) % &lcm).is_zero();
    Ok(E6Report {
        n,
        integral,
        vertices: v.vertices.len(),
        denominator_lcm: lcm.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentConeReport {
    /// The tangent cone equals `{t : t_k + Σ_{l>k} ⟨α_{i_l}, α_{i_k}∨⟩ t_l ≤ 0}`.
    pub matches_lambda_cone: bool,
    /// Its extreme rays form a basis of `ℤ^N`.
    pub unimodular: bool,
    pub rays: Vec<Vec<String>>,
}

fn cone_at(poly: &StringPolytope, point: &[Rat]) -> Result<ConeH> {
    let d = poly.describe()?;
    let n = poly.cone().dim();
    let mut h = HPolyhedron::new(n);
    for row in &d.h.ineqs {
        if row.slack(point).is_zero() {
            h.ineqs.push(Halfspace::new(row.a.clone(), Rat::zero()));
        }
    }
    for e in &d.h.eqs {
        h.eqs.push(Halfspace::new(e.a.clone(), Rat::zero()));
    }
    ConeH::new(h)
}

/// Tangent cone of `Q(λ)` at the highest-weight vertex.
pub fn hw_tangent_cone_check(cone: &StringCone, lambda: &Weight) -> Result<TangentConeReport> {
    if !lambda.is_regular_dominant() {
        return Err(Error::NotRegular(lambda.coords.iter().map(|c| c.to_string()).collect()));
    }
    let poly = cone.polytope(lambda)?;
    let q = poly.highest_weight_vertex();
    let tangent = cone_at(&poly, &q)?;
    let expected = cone.lambda_inequalities(&Weight::zero(lambda.rank()));
    let expected = ConeH::new(expected)?;
    let tv = dd_convert(tangent.as_h())?;
    let ev = dd_convert(expected.as_h())?;
    let matches = tv.rays == ev.rays && tv.lineality == ev.lineality;
    let n = cone.dim();
    let unimodular = tv.lineality.is_empty() && tv.rays.len() == n && {
        let m: Vec<Vec<Rat>> = tv
            .rays
            .iter()
            .map(|r| primitive_row(r).into_iter().map(Rat::from_integer).collect())
            .collect();
        crate::exactgeom::determinant(&m).abs() == rat(1)
    };
    Ok(TangentConeReport {
        matches_lambda_cone: matches,
        unimodular,
        rays: tv.rays.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
    })
}

/// Tangent cone of `Q(λ)` at the origin together with whether it is
/// simplicial (pointed, with as many extreme rays as its dimension).
pub fn origin_tangent_cone(poly: &StringPolytope) -> Result<(ConeH, bool)> {
    let n = poly.cone().dim();
    let c = cone_at(poly, &vec![Rat::zero(); n])?;
    let v = dd_convert(c.as_h())?;
    let span = crate::exactgeom::matrix_rank(&v.rays);
    let simplicial = v.lineality.is_empty() && v.rays.len() == span;
    Ok((c, simplicial))
}
