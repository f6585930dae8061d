//! Exact string cones and string polytopes.
//!
//! The crate is organised in four layers:
//!
//! * [`exactgeom`]: an exact rational polyhedral kernel (double description,
//!   Fourier–Motzkin projection, lattice points, volumes, polar duals, fans).
//! * [`rootdata`]: root systems, Weyl group combinatorics, reduced words and
//!   the dimension / weight multiplicity oracles.
//! * [`crystal`]: a type A tableau crystal that produces string
//!   parametrizations independently of any cone description.
//! * [`stringdata`]: string cones, string polytopes, their fans and the
//!   worked examples built on top of the other three layers.

pub mod crystal;
pub mod error;
pub mod exactgeom;
pub mod rootdata;
pub mod stringdata;

pub use error::{Error, Result};
pub use exactgeom::{ConeH, Fan, HPolyhedron, Halfspace, Rat, VPolytope};
pub use rootdata::{CartanType, ReducedWord, RootSystem, RootVec, Weight};
pub use stringdata::{Provenance, StringCone, StringPolytope};
