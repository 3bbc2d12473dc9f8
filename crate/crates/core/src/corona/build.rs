//! Construction of the corona digraphs.
//!
//! Vertex corona: vertex `k` of the copy attached to vertex `i` of `D1` is
//! `n1 + n1·k + i`. Arc corona: copy `c` occupies `n1 + c·n2 .. n1 + (c+1)·n2`,
//! with copies in canonical arc order (edge order of `U(D1)` for the
//! symmetric variant).

use super::{CoronaKind, CoronaOp, Direction};
use crate::digraph::Digraph;
use crate::error::Result;

pub fn vertex_corona(d1: &Digraph, d2: &Digraph, dir: Direction) -> Result<Digraph> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let (n1, n2) = (d1.n(), d2.n());
    let label = |i: usize, k: usize| n1 + n1 * k + i;
    let mut arcs: Vec<(usize, usize)> = d1.arcs().to_vec();
    for i in 0..n1 {
        arcs.extend(d2.arcs().iter().map(|&(k, l)| (label(i, k), label(i, l))));
        for k in 0..n2 {
            let w = label(i, k);
            if dir != Direction::Backward {
                arcs.push((i, w));
            }
            if dir != Direction::Forward {
                arcs.push((w, i));
            }
        }
    }
    Digraph::new(n1 + n1 * n2, arcs)
}

/// Number of `D2` copies in the arc corona.
pub fn arc_copy_count(d1: &Digraph, dir: Direction) -> usize {
    match dir {
        Direction::Symmetric => d1.underlying_graph().edges.len(),
        _ => d1.arc_count(),
    }
}

/// The arc corona. When `D1` has no arcs there are no copies and the result
/// is `D1` itself.
pub fn arc_corona(d1: &Digraph, d2: &Digraph, dir: Direction) -> Result<Digraph> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let (n1, n2) = (d1.n(), d2.n());
    let pairs = match dir {
        Direction::Symmetric => d1.underlying_graph().edges,
        _ => d1.arcs().to_vec(),
    };
    let mut arcs: Vec<(usize, usize)> = d1.arcs().to_vec();
    for (c, &(u, v)) in pairs.iter().enumerate() {
        let base = n1 + c * n2;
        arcs.extend(d2.arcs().iter().map(|&(k, l)| (base + k, base + l)));
        for j in 0..n2 {
            let w = base + j;
            match dir {
                Direction::Forward => arcs.extend([(u, w), (w, v)]),
                Direction::Backward => arcs.extend([(v, w), (w, u)]),
                Direction::Symmetric => arcs.extend([(u, w), (w, u), (v, w), (w, v)]),
            }
        }
    }
    Digraph::new(n1 + pairs.len() * n2, arcs)
}

pub fn corona(d1: &Digraph, d2: &Digraph, kind: CoronaKind) -> Result<Digraph> {
    match kind.op {
        CoronaOp::Vertex => vertex_corona(d1, d2, kind.direction),
        CoronaOp::Arc => arc_corona(d1, d2, kind.direction),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_examples() {
        let d = vertex_corona(&Digraph::cycle(3), &Digraph::path(2), Direction::Forward).unwrap();
        assert_eq!((d.n(), d.arc_count()), (9, 12));
        // copy 0 of P_2 is {3, 6} with 3 → 6
        assert!(d.has_arc(0, 3) && d.has_arc(0, 6) && d.has_arc(3, 6));
        let back = vertex_corona(&Digraph::cycle(3), &Digraph::path(2), Direction::Backward).unwrap();
        assert!(back.has_arc(3, 0) && !back.has_arc(0, 3));
        assert_eq!(
            vertex_corona(&Digraph::path(1), &Digraph::empty(1), Direction::Symmetric).unwrap(),
            Digraph::cycle(2)
        );
        assert_eq!(
            vertex_corona(&Digraph::path(1), &Digraph::cycle(2), Direction::Symmetric).unwrap(),
            Digraph::complete(3)
        );
        assert!(vertex_corona(&Digraph::empty(0), &Digraph::path(1), Direction::Forward).is_err());
    }

    #[test]
    fn arc_examples() {
        let (p1, p2) = (Digraph::path(1), Digraph::path(2));
        assert_eq!(arc_corona(&p2, &p1, Direction::Forward).unwrap().arcs(), &[(0, 1), (0, 2), (2, 1)]);
        let back = arc_corona(&p2, &p1, Direction::Backward).unwrap();
        assert_eq!(back.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert!(back.is_strongly_connected().unwrap());
        assert_eq!(
            arc_corona(&Digraph::cycle(2), &p1, Direction::Symmetric).unwrap(),
            Digraph::complete(3)
        );
        let e3 = Digraph::empty(3);
        assert_eq!(arc_corona(&e3, &p2, Direction::Forward).unwrap(), e3);
        assert_eq!(arc_copy_count(&Digraph::cycle(2), Direction::Forward), 2);
        assert_eq!(arc_copy_count(&Digraph::cycle(2), Direction::Symmetric), 1);
    }
}
