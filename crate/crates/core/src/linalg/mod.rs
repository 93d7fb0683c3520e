//! Exact linear algebra over `Q` and odd prime fields.

mod matrix;
mod rational;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use rational::{ParseRationalError, Rational};
pub use scalar::{Field, Scalar};
pub use subspace::{Echelon, QuotientCoords, Subspace};
