//! Matrices attached to a digraph.

use serde::{Deserialize, Serialize};

use super::{Digraph, UnderlyingGraph};
use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};
use crate::error::Error;

/// The three spectral matrices: adjacency, Laplacian `D_out - A` and
/// signless Laplacian `D_out + A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    L,
    Q,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            _ => Err(Error::Domain(format!("unknown matrix kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DigraphMatrix {
    Kind(MatrixKind),
    /// `J - A`.
    AntiAdjacency,
    OutDegree,
    InDegree,
}

impl From<MatrixKind> for DigraphMatrix {
    fn from(k: MatrixKind) -> Self {
        DigraphMatrix::Kind(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IncidenceKind {
    /// `b_ij = 1` when vertex `i` is the head of arc `j`.
    BIn,
    /// `b_ij = 1` when vertex `i` is the tail of arc `j`.
    BOut,
    /// Vertex-edge incidence of `U(D)`.
    BUnderlying,
    /// Oriented incidence of `U(D)`, each edge directed low → high.
    NOriented,
}

fn from_usize(v: usize) -> Scalar {
    scalar::int(v as i64)
}

impl Digraph {
    pub fn adjacency(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v, scalar::one());
        }
        m
    }

    pub fn matrix(&self, which: impl Into<DigraphMatrix>) -> ExactMatrix {
        let n = self.n;
        let deg = self.degree_profile();
        let diag = |d: &[usize]| ExactMatrix::diagonal(d.iter().map(|&x| from_usize(x)).collect());
        match which.into() {
            DigraphMatrix::Kind(MatrixKind::A) => self.adjacency(),
            DigraphMatrix::Kind(MatrixKind::L) => {
                diag(&deg.out_degrees).sub(&self.adjacency()).expect("same shape")
            }
            DigraphMatrix::Kind(MatrixKind::Q) => {
                diag(&deg.out_degrees).add(&self.adjacency()).expect("same shape")
            }
            DigraphMatrix::AntiAdjacency => {
                ExactMatrix::all_ones(n, n).sub(&self.adjacency()).expect("same shape")
            }
            DigraphMatrix::OutDegree => diag(&deg.out_degrees),
            DigraphMatrix::InDegree => diag(&deg.in_degrees),
        }
    }

    pub fn incidence(&self, kind: IncidenceKind) -> ExactMatrix {
        match kind {
            IncidenceKind::BIn | IncidenceKind::BOut => {
                let mut m = ExactMatrix::zeros(self.n, self.arcs.len());
                for (j, &(u, v)) in self.arcs.iter().enumerate() {
                    let row = if kind == IncidenceKind::BOut { u } else { v };
                    m.set(row, j, scalar::one());
                }
                m
            }
            IncidenceKind::BUnderlying => self.underlying_graph().incidence(),
            IncidenceKind::NOriented => self.underlying_graph().oriented_incidence(),
        }
    }
}

impl UnderlyingGraph {
    pub fn adjacency(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m.set(u, v, scalar::one());
            m.set(v, u, scalar::one());
        }
        m
    }

    pub fn degree_matrix(&self) -> ExactMatrix {
        ExactMatrix::diagonal(self.degrees().into_iter().map(from_usize).collect())
    }

    /// `D_deg(G) + A(G)`.
    pub fn signless_laplacian(&self) -> ExactMatrix {
        self.degree_matrix().add(&self.adjacency()).expect("same shape")
    }

    pub fn laplacian(&self) -> ExactMatrix {
        self.degree_matrix().sub(&self.adjacency()).expect("same shape")
    }

    pub fn incidence(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            m.set(u, j, scalar::one());
            m.set(v, j, scalar::one());
        }
        m
    }

    pub fn oriented_incidence(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            m.set(u, j, scalar::one());
            m.set(v, j, scalar::int(-1));
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows)
    }

    #[test]
    fn spectral_matrices() {
        let p2 = Digraph::path(2);
        assert_eq!(p2.matrix(MatrixKind::A), m(&[&[0, 1], &[0, 0]]));
        assert_eq!(p2.matrix(MatrixKind::Q), m(&[&[1, 1], &[0, 0]]));
        assert_eq!(
            Digraph::cycle(3).matrix(MatrixKind::L),
            m(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]])
        );
        assert_eq!(p2.matrix(DigraphMatrix::AntiAdjacency), m(&[&[1, 0], &[1, 1]]));
        assert_eq!(p2.matrix(DigraphMatrix::OutDegree), m(&[&[1, 0], &[0, 0]]));
        assert_eq!(p2.matrix(DigraphMatrix::InDegree), m(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn incidences() {
        let p2 = Digraph::path(2);
        assert_eq!(p2.incidence(IncidenceKind::BOut), m(&[&[1], &[0]]));
        assert_eq!(p2.incidence(IncidenceKind::BIn), m(&[&[0], &[1]]));
        assert_eq!(Digraph::cycle(2).incidence(IncidenceKind::BUnderlying), m(&[&[1], &[1]]));
        assert_eq!(Digraph::cycle(2).incidence(IncidenceKind::NOriented), m(&[&[1], &[-1]]));
        let c3 = Digraph::cycle(3);
        let out = c3.incidence(IncidenceKind::BOut);
        let inc = c3.incidence(IncidenceKind::BIn);
        assert_eq!(out.mul(&inc.transpose()).unwrap(), c3.adjacency());
        assert_eq!(inc.transpose().mul(&out).unwrap(), c3.line_digraph().adjacency());
    }

    #[test]
    fn underlying_matrices() {
        let g = Digraph::path(3).underlying_graph();
        let n = g.oriented_incidence();
        let b = g.incidence();
        assert_eq!(n.mul(&n.transpose()).unwrap(), g.laplacian());
        assert_eq!(b.mul(&b.transpose()).unwrap(), g.signless_laplacian());
    }
}
