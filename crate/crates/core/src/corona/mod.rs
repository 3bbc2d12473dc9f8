//! Vertex and arc coronas and their characteristic polynomials.

mod arc;
mod build;
mod kron;
mod vertex;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::digraph::{Digraph, MatrixKind};
use crate::error::{Error, Result};

pub use arc::{
    arc_corona_charpoly, arc_corona_charpoly_closed, arc_corona_charpoly_corollary, ArcCorollary,
    ClosedForm,
};
pub use build::{arc_copy_count, arc_corona, corona, vertex_corona};
pub use kron::{kron_schur_block, kron_schur_charpoly, pencil_det};
pub use vertex::{
    vertex_corona_charpoly, vertex_corona_spectrum_outregular, PairedEigenvalues, ParametricPairs,
    QuadraticRule, SpectrumDescription,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoronaOp {
    Vertex,
    Arc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoronaKind {
    pub op: CoronaOp,
    pub direction: Direction,
}

impl CoronaOp {
    pub fn name(self) -> &'static str {
        match self {
            CoronaOp::Vertex => "vertex",
            CoronaOp::Arc => "arc",
        }
    }
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Forward, Direction::Backward, Direction::Symmetric];

    pub fn short_name(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
            Direction::Symmetric => "sym",
        }
    }
}

impl std::str::FromStr for CoronaOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(CoronaOp::Vertex),
            "arc" => Ok(CoronaOp::Arc),
            _ => Err(Error::Domain(format!("unknown corona operation {s:?}"))),
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fwd" | "forward" => Ok(Direction::Forward),
            "bwd" | "backward" => Ok(Direction::Backward),
            "sym" | "symmetric" => Ok(Direction::Symmetric),
            _ => Err(Error::Domain(format!("unknown direction {s:?}"))),
        }
    }
}

impl CoronaKind {
    pub const ALL: [CoronaKind; 6] = [
        CoronaKind::new(CoronaOp::Vertex, Direction::Forward),
        CoronaKind::new(CoronaOp::Vertex, Direction::Backward),
        CoronaKind::new(CoronaOp::Vertex, Direction::Symmetric),
        CoronaKind::new(CoronaOp::Arc, Direction::Forward),
        CoronaKind::new(CoronaOp::Arc, Direction::Backward),
        CoronaKind::new(CoronaOp::Arc, Direction::Symmetric),
    ];

    pub const fn new(op: CoronaOp, direction: Direction) -> Self {
        Self { op, direction }
    }
}

impl fmt::Display for CoronaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.op.name(), self.direction.short_name())
    }
}

/// The characteristic polynomial of `kind(D1, D2)`'s matrix by the
/// corresponding theorem. Only the symmetric vertex corona has one among
/// the vertex coronas.
pub fn corona_charpoly_theorem(
    d1: &Digraph,
    d2: &Digraph,
    kind: CoronaKind,
    matrix: MatrixKind,
) -> Result<Polynomial> {
    match (kind.op, kind.direction) {
        (CoronaOp::Vertex, Direction::Symmetric) => vertex_corona_charpoly(d1, d2, matrix),
        (CoronaOp::Vertex, _) => Err(Error::Domain(format!(
            "no characteristic polynomial theorem for the {kind} corona"
        ))),
        (CoronaOp::Arc, dir) => arc_corona_charpoly(d1, d2, dir, matrix),
    }
}

/// Whether `kind(D1, D2)` is strongly connected, read off from `D1` alone.
pub fn strong_connectivity_predictions(d1: &Digraph, d2: &Digraph, kind: CoronaKind) -> Result<bool> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    match (kind.op, kind.direction) {
        (CoronaOp::Vertex, Direction::Symmetric) | (CoronaOp::Arc, Direction::Forward) => {
            d1.is_strongly_connected()
        }
        // a vertex in a forward copy has no way back, and symmetrically for
        // backward copies
        (CoronaOp::Vertex, _) => Ok(false),
        (CoronaOp::Arc, _) => d1.underlying_graph().is_connected(),
    }
}

/// Clears a rational expression that must equal a characteristic
/// polynomial of the given degree.
pub(crate) fn clear(value: RationalFunction, degree: usize, what: &str) -> Result<Polynomial> {
    let p = value.into_polynomial(what)?;
    if p.degree() != Some(degree) || !p.is_monic() {
        return Err(Error::NotPolynomial(format!(
            "{what}: expected a monic polynomial of degree {degree}, got {p}"
        )));
    }
    Ok(p)
}
