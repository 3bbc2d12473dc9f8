use corona_spectra::algebra::scalar::int;
use corona_spectra::algebra::{charpoly, numeric_roots, ExactMatrix};
use corona_spectra::corona::*;
use corona_spectra::verify::oracle_charpoly;
use corona_spectra::{Digraph, MatrixKind, Polynomial};

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64(c)
}

/// (λ³ - 2λ - 1)³ - λ⁶
fn c3_p2_adjacency() -> Polynomial {
    &p(&[-1, -2, 0, 1]).pow(3) - &p(&[0, 0, 0, 0, 0, 0, 1])
}

#[test]
fn kron_schur_with_identity_blocks() {
    let eye = ExactMatrix::identity(3);
    let got = kron_schur_charpoly(&Digraph::cycle(3).adjacency(), &Digraph::path(2).adjacency(), &eye, &eye).unwrap();
    assert_eq!(got, c3_p2_adjacency());
    let one = ExactMatrix::identity(1);
    let zero = ExactMatrix::zeros(1, 1);
    assert_eq!(kron_schur_charpoly(&zero, &zero, &one, &one).unwrap(), p(&[-1, 0, 1]));
    let empty_b1 = ExactMatrix::zeros(1, 0);
    let empty_b2 = ExactMatrix::zeros(0, 1);
    assert!(kron_schur_charpoly(&zero, &zero, &empty_b1, &empty_b2).is_err());
}

#[test]
fn symmetric_vertex_corona_examples() {
    let (c3, p2) = (Digraph::cycle(3), Digraph::path(2));
    assert_eq!(vertex_corona_charpoly(&c3, &p2, MatrixKind::A).unwrap(), c3_p2_adjacency());
    let l = vertex_corona_charpoly(&c3, &p2, MatrixKind::L).unwrap();
    assert_eq!(l.degree(), Some(9));
    let built = vertex_corona(&c3, &p2, Direction::Symmetric).unwrap();
    assert_eq!(l, oracle_charpoly(&built.matrix(MatrixKind::L)).unwrap());
    assert_eq!(
        vertex_corona_charpoly(&Digraph::path(1), &Digraph::empty(1), MatrixKind::A).unwrap(),
        p(&[-1, 0, 1])
    );
}

#[test]
fn forward_vertex_corona_shape() {
    let d = vertex_corona(&Digraph::cycle(3), &Digraph::path(2), Direction::Forward).unwrap();
    assert_eq!(d.n(), 9);
    assert_eq!(d.arc_count(), 12);
    let theorem = corona_charpoly_theorem(
        &Digraph::cycle(3),
        &Digraph::path(2),
        CoronaKind::new(CoronaOp::Vertex, Direction::Forward),
        MatrixKind::A,
    );
    assert!(theorem.is_err());
}

#[test]
fn spectrum_examples() {
    let (p1, c2, c3) = (Digraph::path(1), Digraph::cycle(2), Digraph::cycle(3));
    let s = vertex_corona_spectrum_outregular(&p1, &c2, MatrixKind::A).unwrap();
    assert_eq!(s.inherited, p(&[1, 1]));
    assert_eq!(s.inherited_multiplicity, 1);
    assert_eq!(s.paired.len(), 1);
    assert_eq!(s.paired[0].quadratic, p(&[-2, -1, 1]));
    let roots: Vec<(f64, usize)> = numeric_roots(&s.expand().unwrap(), 1e-9)
        .unwrap()
        .iter()
        .map(|r| (r.re, r.multiplicity))
        .collect();
    assert_eq!(roots.len(), 2);
    assert!((roots[0].0 + 1.0).abs() < 1e-9 && roots[0].1 == 2);
    assert!((roots[1].0 - 2.0).abs() < 1e-9 && roots[1].1 == 1);

    let s = vertex_corona_spectrum_outregular(&p1, &c3, MatrixKind::A).unwrap();
    assert_eq!(s.inherited, p(&[1, 1, 1]));
    assert_eq!(s.paired[0].quadratic, p(&[-3, -1, 1]));

    let s = vertex_corona_spectrum_outregular(&p1, &c2, MatrixKind::L).unwrap();
    assert_eq!(s.paired[0].mu, int(0));
    assert_eq!(s.paired[0].quadratic, p(&[0, -3, 1]));
    assert_eq!(
        s.expand().unwrap(),
        vertex_corona_charpoly(&p1, &c2, MatrixKind::L).unwrap()
    );
}

#[test]
fn arc_corona_examples() {
    let (p1, p2, c2) = (Digraph::path(1), Digraph::path(2), Digraph::cycle(2));
    let fwd = arc_corona(&p2, &p1, Direction::Forward).unwrap();
    assert_eq!(fwd.arcs(), &[(0, 1), (0, 2), (2, 1)]);
    assert_eq!(arc_corona_charpoly(&p2, &p1, Direction::Forward, MatrixKind::A).unwrap(), p(&[0, 0, 0, 1]));
    assert_eq!(arc_corona_charpoly(&p2, &p1, Direction::Backward, MatrixKind::A).unwrap(), p(&[-1, 0, 0, 1]));
    let k3 = &p(&[-2, 1]) * &p(&[1, 1]).pow(2);
    assert_eq!(arc_corona_charpoly(&c2, &p1, Direction::Symmetric, MatrixKind::A).unwrap(), k3);
    assert_eq!(arc_corona(&c2, &p1, Direction::Symmetric).unwrap(), Digraph::complete(3));
}

#[test]
fn closed_form_examples() {
    let (p1, p2, c2, c3) = (Digraph::path(1), Digraph::path(2), Digraph::cycle(2), Digraph::cycle(3));
    let poly = |c: ClosedForm| match c {
        ClosedForm::Polynomial { charpoly, .. } => charpoly,
        other => panic!("expected a polynomial, got {other:?}"),
    };
    assert_eq!(
        poly(arc_corona_charpoly_closed(&p2, &p1, Direction::Backward, MatrixKind::A).unwrap()),
        p(&[-1, 0, 0, 1])
    );
    assert_eq!(
        poly(arc_corona_charpoly_corollary(&c2, &p1, ArcCorollary::SymmetricRegularA).unwrap()),
        &p(&[-2, 1]) * &p(&[1, 1]).pow(2)
    );
    assert_eq!(
        poly(arc_corona_charpoly_closed(&c3, &p1, Direction::Forward, MatrixKind::L).unwrap()),
        arc_corona_charpoly(&c3, &p1, Direction::Forward, MatrixKind::L).unwrap()
    );
    // P_3 is neither symmetric nor a tournament
    assert!(matches!(
        arc_corona_charpoly_closed(&Digraph::path(3), &p1, Direction::Backward, MatrixKind::A).unwrap(),
        ClosedForm::NoClosedForm { .. }
    ));
    assert!(matches!(
        arc_corona_charpoly_corollary(&Digraph::path(3), &p1, ArcCorollary::BackwardTournamentA).unwrap(),
        ClosedForm::HypothesisFailed { .. }
    ));
}

#[test]
fn arcless_first_factor_gives_itself() {
    let e = Digraph::empty(4);
    for dir in Direction::ALL {
        assert_eq!(arc_corona(&e, &Digraph::cycle(3), dir).unwrap(), e);
        assert_eq!(
            arc_corona_charpoly(&e, &Digraph::cycle(3), dir, MatrixKind::Q).unwrap(),
            charpoly(&e.matrix(MatrixKind::Q)).unwrap()
        );
    }
}

#[test]
fn connectivity_examples() {
    let sym_vertex = CoronaKind::new(CoronaOp::Vertex, Direction::Symmetric);
    assert!(strong_connectivity_predictions(&Digraph::cycle(3), &Digraph::path(2), sym_vertex).unwrap());
    let fwd = CoronaKind::new(CoronaOp::Arc, Direction::Forward);
    let bwd = CoronaKind::new(CoronaOp::Arc, Direction::Backward);
    assert!(!strong_connectivity_predictions(&Digraph::path(3), &Digraph::path(1), fwd).unwrap());
    assert!(strong_connectivity_predictions(&Digraph::path(3), &Digraph::path(1), bwd).unwrap());
}
