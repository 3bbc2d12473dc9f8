use proptest::prelude::*;

use corona_spectra::algebra::{charpoly, coronal, numeric_roots, ExactMatrix, Polynomial, RationalFunction};
use corona_spectra::corona::*;
use corona_spectra::digraph::{parse_digraph, serialize_digraph, IncidenceKind};
use corona_spectra::verify::{
    oracle_charpoly, oracle_coronal, oracle_strongly_connected, random_digraph, run_suite, SweepConfig,
};
use corona_spectra::{Digraph, MatrixKind};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, any::<u64>(), 0.0..=1.0f64).prop_map(|(n, seed, d)| random_digraph(seed, n, d).unwrap())
}

fn int_matrix(max_n: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(n).collect();
            ExactMatrix::from_i64_rows(&rows)
        })
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 0..6).prop_map(|c| Polynomial::from_i64(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.degree() < b.degree() || r.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
        }
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        }
    }

    #[test]
    fn rational_functions_are_canonical(a in poly(), b in poly(), c in poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RationalFunction::new(&a * &c, &b * &c).unwrap();
        let y = RationalFunction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.den().is_monic());
        if !a.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn charpoly_algorithms_agree(m in int_matrix(7)) {
        prop_assert_eq!(charpoly(&m).unwrap(), oracle_charpoly(&m).unwrap());
    }

    #[test]
    fn coronal_algorithms_agree(m in int_matrix(6)) {
        let chi = coronal(&m).unwrap();
        prop_assert_eq!(&chi, &oracle_coronal(&m).unwrap());
        prop_assert_eq!(&chi, &coronal(&m.transpose()).unwrap());
    }

    #[test]
    fn digraph_involutions(d in digraph(8)) {
        prop_assert_eq!(d.transpose().transpose(), d.clone());
        prop_assert_eq!(d.complement().complement(), d.clone());
        let n = d.n();
        let expected = ExactMatrix::all_ones(n, n).sub(&d.adjacency()).unwrap().sub(&ExactMatrix::identity(n)).unwrap();
        prop_assert_eq!(d.complement().adjacency(), expected);
        prop_assert_eq!(d.transpose().adjacency(), d.adjacency().transpose());
        let deg = d.degree_profile();
        prop_assert_eq!(deg.out_degrees.iter().sum::<usize>(), d.arc_count());
        prop_assert_eq!(deg.in_degrees.iter().sum::<usize>(), d.arc_count());
        prop_assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d.clone());
        prop_assert_eq!(d.is_strongly_connected().unwrap(), oracle_strongly_connected(&d).unwrap());
    }

    #[test]
    fn incidence_identities(d in digraph(7)) {
        let bout = d.incidence(IncidenceKind::BOut);
        let bin = d.incidence(IncidenceKind::BIn);
        prop_assert_eq!(bout.mul(&bin.transpose()).unwrap(), d.adjacency());
        prop_assert_eq!(bin.transpose().mul(&bout).unwrap(), d.line_digraph().adjacency());
        let g = d.underlying_graph();
        let n = d.incidence(IncidenceKind::NOriented);
        prop_assert_eq!(n.mul(&n.transpose()).unwrap(), g.laplacian());
        let b = d.incidence(IncidenceKind::BUnderlying);
        prop_assert_eq!(b.mul(&b.transpose()).unwrap(), g.signless_laplacian());
    }

    #[test]
    fn vertex_corona_theorem(d1 in digraph(3), d2 in digraph(2), k in 0usize..3) {
        let kind = MatrixKind::ALL[k];
        let built = vertex_corona(&d1, &d2, Direction::Symmetric).unwrap();
        prop_assert_eq!(
            vertex_corona_charpoly(&d1, &d2, kind).unwrap(),
            oracle_charpoly(&built.matrix(kind)).unwrap()
        );
    }

    #[test]
    fn arc_corona_theorem(d1 in digraph(4), d2 in digraph(2), k in 0usize..3, dir in 0usize..3) {
        let (kind, dir) = (MatrixKind::ALL[k], Direction::ALL[dir]);
        prop_assume!(d1.n() + arc_copy_count(&d1, dir) * d2.n() <= 12);
        let built = arc_corona(&d1, &d2, dir).unwrap();
        prop_assert_eq!(
            arc_corona_charpoly(&d1, &d2, dir, kind).unwrap(),
            oracle_charpoly(&built.matrix(kind)).unwrap()
        );
    }

    #[test]
    fn symmetric_first_factor_forward_equals_backward(seed in any::<u64>(), n in 1usize..5, d2 in digraph(2), k in 0usize..3) {
        let half = random_digraph(seed, n, 0.5).unwrap();
        let sym = Digraph::new(n, half.arcs().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect::<std::collections::BTreeSet<_>>()).unwrap();
        prop_assume!(sym.arc_count() + n <= 8);
        let kind = MatrixKind::ALL[k];
        prop_assert_eq!(
            arc_corona_charpoly(&sym, &d2, Direction::Forward, kind).unwrap(),
            arc_corona_charpoly(&sym, &d2, Direction::Backward, kind).unwrap()
        );
    }

    #[test]
    fn connectivity_prediction(d1 in digraph(5), d2 in digraph(3), k in 0usize..6) {
        let kind = CoronaKind::ALL[k];
        let built = corona(&d1, &d2, kind).unwrap();
        prop_assert_eq!(
            strong_connectivity_predictions(&d1, &d2, kind).unwrap(),
            built.is_strongly_connected().unwrap()
        );
    }

    #[test]
    fn symmetric_factors_give_real_spectrum(s1 in any::<u64>(), s2 in any::<u64>(), n1 in 1usize..4, n2 in 1usize..3) {
        let sym = |seed: u64, n: usize| {
            let d = random_digraph(seed, n, 0.5).unwrap();
            Digraph::new(n, d.arcs().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect::<std::collections::BTreeSet<_>>()).unwrap()
        };
        let f = vertex_corona_charpoly(&sym(s1, n1), &sym(s2, n2), MatrixKind::A).unwrap();
        for root in numeric_roots(&f, 1e-9).unwrap() {
            prop_assert!(root.im.abs() <= 1e-9, "{:?}", root);
        }
    }
}

#[test]
fn sweeps_are_deterministic() {
    let config = SweepConfig {
        seed: 11,
        trials: 6,
        max_n: 4,
        ..SweepConfig::default()
    };
    let a = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
    assert_eq!(a, b);
    let other = serde_json::to_string(&run_suite(&SweepConfig { seed: 12, ..config }).unwrap()).unwrap();
    assert_ne!(a, other);
}

#[test]
fn vertex_suite_reports_one_verdict_per_trial() {
    let config = SweepConfig {
        seed: 1,
        trials: 25,
        max_n: 8,
        suites: vec!["vertex-corona-A".into()],
        ..SweepConfig::default()
    };
    let reports = run_suite(&config).unwrap();
    assert_eq!(reports.len(), 25);
    assert!(reports.iter().all(|r| r.verdict == corona_spectra::verify::Verdict::Match));
}

#[test]
fn tournament_suite_contains_directed_triangle() {
    let config = SweepConfig {
        exhaustive: true,
        max_n: 3,
        suites: vec!["tournament-backward-arc".into()],
        ..SweepConfig::default()
    };
    let reports = run_suite(&config).unwrap();
    let triangle = reports
        .iter()
        .find(|r| {
            r.instance.d1.as_ref() == Some(&Digraph::path(2)) && r.instance.d2.as_ref() == Some(&Digraph::path(1))
        })
        .expect("P_2 with P_1 is in the pool");
    let cube_minus_one = corona_spectra::verify::Value::Polynomial(Polynomial::from_i64(&[-1, 0, 0, 1]));
    assert_eq!(triangle.expected.as_ref(), Some(&cube_minus_one));
    assert_eq!(triangle.actual.as_ref(), Some(&cube_minus_one));
}
