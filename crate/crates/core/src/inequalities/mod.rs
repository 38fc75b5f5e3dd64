//! Inequality families on the a/b decomposition, indexed by the vertices of
//! the polyhedra `Q(r, r')`.

pub mod check;
pub mod families;
pub mod farkas;
pub mod forms;
pub mod lemmas;
pub mod novelty;
pub mod qpoly;

pub use check::{check_vector, CheckOptions, CheckReport};
pub use families::VariantType;
pub use farkas::implied_by;
pub use forms::{ab_to_h_form, Family, LinearFormAB, LinearFormH, Sym};
pub use qpoly::{q_polyhedron, q_vertices, vertices};
