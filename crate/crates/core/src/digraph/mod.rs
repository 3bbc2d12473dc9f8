//! Simple digraphs: construction, families, operations and predicates.

mod io;
mod matrices;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_digraph, parse_dot, serialize_digraph, to_dot, ParseError};
pub use matrices::{DigraphMatrix, IncidenceKind, MatrixKind};

/// A loopless digraph without multiple arcs on vertices `0..n`.
///
/// Arcs are kept sorted by `(tail, head)`; this canonical order fixes the
/// column order of incidence matrices and the copy order of arc coronas.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDigraph> for Digraph {
    type Error = Error;
    fn try_from(raw: RawDigraph) -> Result<Self> {
        Digraph::new(raw.n, raw.arcs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Empty,
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Empty => "empty",
            Family::Complete => "complete",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "empty" => Ok(Family::Empty),
            "complete" => Ok(Family::Complete),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

/// The simple graph `U(D)`: edges `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnderlyingGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UnderlyingGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected in the usual sense; the graph on one vertex is connected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let adj = self.neighbours();
        Ok(reach(&adj, 0).into_iter().all(|r| r))
    }

    /// Two-colourable.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbours();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let c = colour[u].unwrap();
                for &v in &adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!c);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralPredicates {
    pub is_symmetric: bool,
    pub is_tournament: bool,
    pub out_regular: Option<usize>,
    pub is_bipartite: bool,
    pub degree_profile: DegreeProfile,
}

impl Digraph {
    /// Validates and canonicalises an arc list.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "arc ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("duplicate arc {:?}", w[0])));
        }
        Ok(Self { n, arcs })
    }

    /// Callers guarantee the arcs are valid; only sorting and deduplication
    /// happen here.
    fn from_valid(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        Self { n, arcs }
    }

    pub fn family(kind: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain(format!("{} family needs n >= 1", kind.name())));
        }
        Ok(match kind {
            Family::Path => Self::path(n),
            Family::Cycle => {
                if n < 2 {
                    return Err(Error::Domain("cycle needs n >= 2".into()));
                }
                Self::cycle(n)
            }
            Family::Empty => Self::empty(n),
            Family::Complete => Self::complete(n),
        })
    }

    /// The directed path `0 → 1 → … → n-1`.
    pub fn path(n: usize) -> Self {
        Self::from_valid(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// The directed cycle on `n >= 2` vertices; `C_2` is a symmetric pair.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "cycle needs n >= 2");
        Self::from_valid(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn empty(n: usize) -> Self {
        Self { n, arcs: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_valid(
            n,
            (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
        }
        adj
    }

    pub fn transpose(&self) -> Self {
        Self::from_valid(self.n, self.arcs.iter().map(|&(u, v)| (v, u)).collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        Self::from_valid(
            n,
            (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && !self.has_arc(u, v))
                .collect(),
        )
    }

    pub fn underlying_graph(&self) -> UnderlyingGraph {
        let mut edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        UnderlyingGraph { n: self.n, edges }
    }

    /// `D1 ∨ D2`: the disjoint union plus both arcs between every cross pair.
    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.disjoint_union(other);
        let n1 = self.n;
        for u in 0..n1 {
            for v in n1..n1 + other.n {
                g.arcs.push((u, v));
                g.arcs.push((v, u));
            }
        }
        Self::from_valid(g.n, g.arcs)
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n1 = self.n;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + n1, v + n1)))
            .collect();
        Self::from_valid(n1 + other.n, arcs)
    }

    /// One vertex per arc, in canonical arc order; `e → f` when the head of
    /// `e` is the tail of `f`.
    pub fn line_digraph(&self) -> Self {
        let m = self.arcs.len();
        let mut arcs = Vec::new();
        for (i, &(_, head)) in self.arcs.iter().enumerate() {
            for (j, &(tail, _)) in self.arcs.iter().enumerate() {
                // a pair of opposite arcs uv, vu gives arcs both ways, never a loop
                if head == tail && i != j {
                    arcs.push((i, j));
                }
            }
        }
        Self::from_valid(m, arcs)
    }

    pub fn is_strongly_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let forward = reach(&self.out_neighbours(), 0);
        if !forward.into_iter().all(|r| r) {
            return Ok(false);
        }
        let backward = reach(&self.transpose().out_neighbours(), 0);
        Ok(backward.into_iter().all(|r| r))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut out_degrees = vec![0; self.n];
        let mut in_degrees = vec![0; self.n];
        for &(u, v) in &self.arcs {
            out_degrees[u] += 1;
            in_degrees[v] += 1;
        }
        DegreeProfile {
            out_degrees,
            in_degrees,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        self.arcs.len() == self.n * self.n.saturating_sub(1) / 2
            && self.arcs.iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    /// The common out-degree, if there is one. `None` for `n = 0`.
    pub fn out_regular(&self) -> Option<usize> {
        let deg = self.degree_profile().out_degrees;
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            is_symmetric: self.is_symmetric(),
            is_tournament: self.is_tournament(),
            out_regular: self.out_regular(),
            is_bipartite: self.underlying_graph().is_bipartite(),
            degree_profile: self.degree_profile(),
        }
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.n == 0 {
            Err(Error::EmptyDigraph)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_digraph(self))
    }
}

/// Vertices reachable from `start` by breadth-first search.
fn reach(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}
