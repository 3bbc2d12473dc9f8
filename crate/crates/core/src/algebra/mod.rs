//! Exact arithmetic: scalars, polynomials, rational functions, matrices.

pub mod charpoly;
mod json;
pub mod lemmas;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;

pub use charpoly::{charpoly, coronal, Resolvent};
pub use lemmas::{rank_one_det, rank_one_inverse, schur_block_det};
pub use matrix::{ExactMatrix, Field, FunctionMatrix, Matrix, PolyMatrix, Ring};
pub use poly::Polynomial;
pub use ratfunc::{compose_poly_with_ratfunc, RationalFunction};
pub use roots::{numeric_roots, Root};
pub use scalar::Scalar;
