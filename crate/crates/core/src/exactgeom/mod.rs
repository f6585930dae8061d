//! Exact rational polyhedral kernel.
//!
//! Every polyhedron is stored in the orientation `a·x ≤ b` (inequalities) and
//! `a·x = b` (equations). Conversions between the inequality and generator
//! forms go through an incremental double description on primitive integer
//! vectors, so nothing is ever rounded.

mod bitset;
mod dd;
mod fan;
mod lattice;
mod ops;
mod porta;
mod rat;
mod reduce;
mod types;
mod volume;

pub use fan::{
    common_refinement, face_generators, faces, faces_with_budget, Fan, FaceGenerators,
    DEFAULT_FACE_BUDGET,
};
pub use lattice::{lattice_points, LatticeEnumerator};
pub use ops::{
    convex_hull, dd_convert, dd_convert_with_bound, dilate, is_integral, is_reflexive,
    minkowski_sum, polar_dual, project, DEFAULT_MAX_DIM,
};
pub use porta::{
    parse_ieq, parse_poi, polyhedron_json, polytope_json, write_ieq, write_poi, PolyhedronRecord,
    RowRecord,
};
pub use rat::{
    determinant, dot, fmt_vec, matrix_rank, frac, is_integer_vec, parse_rat, parse_rat_vec, primitive_row, rat,
    Rat,
};
pub use reduce::{facet_reduce, Description};
pub use types::{ConeH, HPolyhedron, Halfspace, VPolytope};
pub use volume::{integer_kernel_basis, volume};
