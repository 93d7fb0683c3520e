//! Structure-constant Lie algebras, maps between them, and the JSON format.

mod algebra;
mod ideals;
mod json;

pub use algebra::{bracket_spaces, default_labels, IntRelation, JacobiViolation, LieAlgebra, SparseVec};
pub use ideals::AlgebraMap;
pub use json::{AlgebraJson, BracketJson, FieldJson, TermJson};
