use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::tableau::{for_each_tableau, reading_word, string_of_reading_word};
use super::weight_shape;
use crate::error::{Error, Result};
use crate::exactgeom::{convex_hull, rat, ConeH, HPolyhedron, Rat, VPolytope};
use crate::rootdata::{CartanType, ReducedWord, RootSystem, Weight};
use crate::stringdata::{certify_by_counts, weight_box, Provenance, StringCone};

fn require_type_a(rs: &RootSystem) -> Result<()> {
    if rs.cartan_type() != CartanType::A {
        return Err(Error::ProviderMismatch(format!("crystal model needs type A, got {}", rs.name())));
    }
    Ok(())
}

fn check_weight(rs: &RootSystem, word: &ReducedWord, lambda: &Weight) -> Result<Vec<usize>> {
    require_type_a(rs)?;
    rs.require_reduced(word)?;
    if lambda.rank() != rs.rank() {
        return Err(Error::DimMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    weight_shape(lambda)
}

/// Calls `f` with the string of every element of `B(λ)`.
fn for_each_string(shape: &[usize], letters: usize, word: &ReducedWord, f: &mut dyn FnMut(&[i64])) {
    let (mut out, mut stack) = (Vec::new(), Vec::new());
    for_each_tableau(shape, letters, &mut |rows| {
        let mut rw = reading_word(rows);
        string_of_reading_word(&mut rw, word.letters(), &mut out, &mut stack);
        f(&out);
    });
}

/// String coordinates of every element of `B(λ)` for `word`.
pub fn string_set(rs: &RootSystem, word: &ReducedWord, lambda: &Weight) -> Result<BTreeSet<Vec<i64>>> {
    let shape = check_weight(rs, word, lambda)?;
    let mut set = BTreeSet::new();
    for_each_string(&shape, rs.rank() + 1, word, &mut |s| {
        set.insert(s.to_vec());
    });
    Ok(set)
}

/// Strings of `B(λ)` against lattice points of the string polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCheckReport {
    pub strings: usize,
    pub lattice_points: usize,
    /// Strings outside the polytope.
    pub missing_from_polytope: Vec<Vec<i64>>,
    /// Lattice points that are no string.
    pub extra_in_polytope: Vec<Vec<i64>>,
}

impl LatticeCheckReport {
    pub fn equal(&self) -> bool {
        self.missing_from_polytope.is_empty() && self.extra_in_polytope.is_empty()
    }
}

/// Compares the crystal's strings with `Q(λ) ∩ ℤ^N` for a full-word cone.
pub fn crystal_lattice_check(cone: &StringCone, lambda: &Weight) -> Result<LatticeCheckReport> {
    if cone.offset() != 0 {
        return Err(Error::ProviderMismatch("crystal check needs a full-word cone".into()));
    }
    let strings = string_set(cone.root_system(), cone.word(), lambda)?;
    let points: BTreeSet<Vec<i64>> = cone.polytope(lambda)?.lattice_points()?.into_iter().collect();
    Ok(LatticeCheckReport {
        strings: strings.len(),
        lattice_points: points.len(),
        missing_from_polytope: strings.difference(&points).cloned().collect(),
        extra_in_polytope: points.difference(&strings).cloned().collect(),
    })
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

/// Integer rows `a·x ≤ 0` and `a·x = 0` of a homogeneous H-description.
fn int_rows(h: &HPolyhedron) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let conv = |rows: &[crate::exactgeom::Halfspace]| -> Result<Vec<Vec<i64>>> {
        rows.iter()
            .map(|r| {
                r.normalized()
                    .a
                    .iter()
                    .map(|x| {
                        i64::try_from(x.to_integer()).map_err(|_| Error::Overflow("string cone rows"))
                    })
                    .collect()
            })
            .collect()
    };
    Ok((conv(&h.ineqs)?, conv(&h.eqs)?))
}

fn conic_hull(dim: usize, gens: &BTreeSet<Vec<i64>>) -> Result<HPolyhedron> {
    let rays: Vec<Vec<Rat>> = gens.iter().map(|g| g.iter().map(|&x| rat(x)).collect()).collect();
    convex_hull(&VPolytope::with_rays(dim, vec![vec![rat(0); dim]], rays))
}

/// Conic hull of all strings of `B(λ)` for λ in `[0, degree]^r`. It is
/// accepted only if lattice counts match the Weyl dimension on that box and
/// no string for λ in `[0, degree+1]^r` leaves it.
pub fn empirical_string_cone(rs: &RootSystem, word: &ReducedWord, degree: u32) -> Result<StringCone> {
    require_type_a(rs)?;
    rs.require_reduced(word)?;
    if degree == 0 {
        return Err(Error::CertificationFailed("degree bound must be at least 1".into()));
    }
    let n = word.len();
    let letters = rs.rank() + 1;
    let shapes = |bound: u32| -> Result<Vec<(Vec<i64>, Vec<usize>)>> {
        weight_box(rs.rank(), bound)
            .into_iter()
            .map(|l| Ok((l.clone(), weight_shape(&Weight::from_ints(&l))?)))
            .collect()
    };

    let dirs: Vec<Vec<i64>> = shapes(degree)?
        .par_iter()
        .map(|(_, shape)| {
            let mut set = BTreeSet::new();
            for_each_string(shape, letters, word, &mut |s| {
                if s.iter().any(|&x| x != 0) {
                    set.insert(primitive(s));
                }
            });
            set
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .into_iter()
        .collect();

    // Grow a generating set from the fundamental crystals, adding for each
    // violated row the direction that violates it most.
    let mut gens: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 1..=rs.rank() {
        for s in string_set(rs, word, &Weight::fundamental(rs.rank(), i))? {
            if s.iter().any(|&x| x != 0) {
                gens.insert(primitive(&s));
            }
        }
    }
    let dot = |a: &[i64], d: &[i64]| a.iter().zip(d).map(|(x, y)| x * y).sum::<i64>();
    let hull = loop {
        let h = conic_hull(n, &gens)?;
        let (ineqs, eqs) = int_rows(&h)?;
        let mut added = false;
        for a in &ineqs {
            if let Some(d) = dirs.iter().filter(|d| dot(a, d) > 0).max_by_key(|d| dot(a, d)) {
                added |= gens.insert(d.clone());
            }
        }
        for a in &eqs {
            if let Some(d) = dirs.iter().find(|d| dot(a, d) != 0) {
                added |= gens.insert(d.clone());
            }
        }
        if !added {
            break h;
        }
    };

    let cone = StringCone::new(
        rs.clone(),
        word.clone(),
        0,
        ConeH::new(hull)?,
        Provenance::EmpiricalCertified { degree },
    )?;
    let fail = |what: String| Error::CertificationFailed(format!("{} word {word} at degree {degree}: {what}", rs.name()));

    let cert = certify_by_counts(&cone, degree)?;
    if let Some((l, got, want)) = cert.failures.first() {
        return Err(fail(format!("λ = {l} has {got} lattice points, dim V(λ) = {want}")));
    }

    // Stability: the strings one degree up add no new direction.
    let (ineqs, eqs) = int_rows(cone.cone().as_h())?;
    let outside = shapes(degree + 1)?
        .into_par_iter()
        .filter(|(l, _)| l.iter().any(|&x| x > degree as i64))
        .find_map_first(|(l, shape)| {
            let mut bad = None;
            for_each_string(&shape, letters, word, &mut |s| {
                if bad.is_none()
                    && (ineqs.iter().any(|a| dot(a, s) > 0) || eqs.iter().any(|a| dot(a, s) != 0))
                {
                    bad = Some((l.clone(), s.to_vec()));
                }
            });
            bad
        });
    if let Some((l, s)) = outside {
        return Err(fail(format!("string {s:?} of λ = {l:?} leaves the cone")));
    }
    Ok(cone)
}
