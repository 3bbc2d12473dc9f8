//! Exact spectra of corona products of digraphs.
//!
//! The crate builds vertex and arc coronas of simple digraphs, computes the
//! characteristic polynomials of their adjacency, Laplacian and signless
//! Laplacian matrices in exact rational arithmetic, and evaluates the
//! closed-form expressions for those polynomials through coronals
//! `χ_M(λ) = 1ᵀ(λI - M)⁻¹1`. Independent oracles in [`verify`] check every
//! closed form against brute force.

pub mod algebra;
pub mod digraph;
pub mod corona;
pub mod coronal;
pub mod error;
pub mod verify;

pub use algebra::{ExactMatrix, Polynomial, RationalFunction, Scalar};
pub use digraph::{Digraph, Family, MatrixKind};
pub use error::{Error, Result};
