use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::cones::{string_cone, Provider};
use super::StringCone;
use crate::error::Result;
use crate::rootdata::{ReducedWord, RootSystem, Weight};

/// Counts for `Q(λ)` of one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub word: String,
    pub provenance: String,
    pub vertices: usize,
    pub facets: usize,
    pub lattice_points: u64,
    pub integral: bool,
}

/// How often each vertex and facet count occurs across a census.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub words: usize,
    pub vertex_counts: BTreeMap<usize, usize>,
    pub facet_counts: BTreeMap<usize, usize>,
}

impl CensusSummary {
    pub fn from_rows(rows: &[CensusRow]) -> Self {
        let mut s = CensusSummary {
            words: rows.len(),
            ..Default::default()
        };
        for r in rows {
            *s.vertex_counts.entry(r.vertices).or_default() += 1;
            *s.facet_counts.entry(r.facets).or_default() += 1;
        }
        s
    }
}

/// Counts for `Q(λ)` of one cone.
pub fn census_row(cone: &StringCone, lambda: &Weight) -> Result<CensusRow> {
    let poly = cone.polytope(lambda)?;
    let d = poly.describe()?;
    Ok(CensusRow {
        word: cone.word().to_string(),
        provenance: cone.provenance().to_string(),
        vertices: d.vertex_count(),
        facets: d.facet_count(),
        lattice_points: poly.lattice_count()?,
        integral: poly.is_integral()?,
    })
}

/// Builds each word's cone and `Q(λ)` in parallel; rows come back in word order.
pub fn census(rs: &RootSystem, words: &[ReducedWord], lambda: &Weight, provider: &Provider) -> Result<Vec<CensusRow>> {
    words
        .par_iter()
        .map(|w| census_row(&string_cone(rs, w, provider)?, lambda))
        .collect()
}

/// Census over cones that are already built.
pub fn census_of_cones(cones: &[StringCone], lambda: &Weight) -> Result<Vec<CensusRow>> {
    cones.par_iter().map(|c| census_row(c, lambda)).collect()
}
