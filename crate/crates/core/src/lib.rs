//! Exact computations around Ehrhart h*-polynomials of lattice simplices:
//! the symmetric a/b decomposition, box groups and their age profiles,
//! sumset lemmas, the polyhedra `Q(r, r')` and the inequality families
//! built from their vertices, Farkas implication between inequalities, and
//! the low-dimensional realization cones.

pub mod cones;
pub mod error;
pub mod inequalities;
pub mod lattice;
pub mod polynomials;
pub mod rational;
pub mod sumsets;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use polynomials::{decompose, recompose, AbDecomposition, HStarVector};
