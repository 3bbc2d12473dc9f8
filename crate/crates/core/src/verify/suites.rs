//! The suite registry.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::oracle::{oracle_charpoly, oracle_coronal, oracle_strongly_connected};
use super::random::{
    random_digraph, random_int_matrix, random_outregular, random_rational_matrix, random_symmetric,
    random_tournament,
};
use super::{Check, InstanceDescriptor, Suite, SweepConfig, Task, CORONA_VERTEX_CAP};
use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};
use crate::algebra::{charpoly, coronal, rank_one_det, rank_one_inverse, schur_block_det};
use crate::corona::{
    arc_copy_count, arc_corona_charpoly, arc_corona_charpoly_closed, arc_corona_charpoly_corollary,
    corona, kron_schur_block, kron_schur_charpoly, strong_connectivity_predictions,
    vertex_corona_charpoly, vertex_corona_spectrum_outregular, ArcCorollary, ClosedForm, CoronaKind, CoronaOp,
    Direction,
};
use crate::coronal::{
    charpoly_affine, complement_charpoly, complement_charpoly_outregular, complement_coronal, coronal_affine,
    EquitablePartition, FamilySpec,
};
use crate::digraph::{Digraph, IncidenceKind, MatrixKind};
use crate::error::Error;

/// Every theorem and corollary operation a suite must exercise.
pub const COVERED_OPS: &[&str] = &[
    "charpoly",
    "coronal",
    "schur_block_det",
    "rank_one_det",
    "rank_one_inverse",
    "incidence",
    "line_digraph",
    "is_strongly_connected",
    "coronal_constant_rowsum",
    "coronal_affine",
    "charpoly_affine",
    "complement_coronal",
    "complement_charpoly",
    "complement_charpoly_outregular",
    "coronal_join_outregular",
    "coronal_semiregular_bipartite",
    "coronal_fullside_bipartite",
    "coronal_path",
    "coronal_equitable",
    "two_block_closed_form",
    "kron_schur_charpoly",
    "vertex_corona_charpoly",
    "vertex_corona_spectrum_outregular",
    "arc_corona_charpoly",
    "arc_corona_charpoly_closed",
    "backward-symmetric-a",
    "backward-tournament-a",
    "symmetric-regular-a",
    "forward-regular-l",
    "symmetric-regular-l",
    "forward-regular-q",
    "symmetric-regular-q",
    "strong_connectivity_predictions",
];

pub fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "charpoly-algorithms", covers: &["charpoly"], build: charpoly_algorithms },
        Suite { name: "coronal-algorithms", covers: &["coronal"], build: coronal_algorithms },
        Suite {
            name: "algebra-lemmas",
            covers: &["schur_block_det", "rank_one_det", "rank_one_inverse"],
            build: algebra_lemmas,
        },
        Suite {
            name: "incidence-identities",
            covers: &["incidence", "line_digraph", "is_strongly_connected"],
            build: incidence_identities,
        },
        Suite {
            name: "coronal-formulas",
            covers: &[
                "coronal_constant_rowsum",
                "coronal_join_outregular",
                "coronal_semiregular_bipartite",
                "coronal_fullside_bipartite",
                "coronal_path",
            ],
            build: coronal_formulas,
        },
        Suite {
            name: "equitable-partitions",
            covers: &["coronal_equitable", "two_block_closed_form"],
            build: equitable_partitions,
        },
        Suite {
            name: "complement",
            covers: &[
                "complement_coronal",
                "complement_charpoly",
                "complement_charpoly_outregular",
                "coronal_affine",
                "charpoly_affine",
            ],
            build: complement,
        },
        Suite { name: "kron-schur", covers: &["kron_schur_charpoly"], build: kron_schur },
        Suite { name: "vertex-corona-A", covers: &["vertex_corona_charpoly"], build: |c, r| vertex_suite(c, r, MatrixKind::A) },
        Suite { name: "vertex-corona-L", covers: &["vertex_corona_charpoly"], build: |c, r| vertex_suite(c, r, MatrixKind::L) },
        Suite { name: "vertex-corona-Q", covers: &["vertex_corona_charpoly"], build: |c, r| vertex_suite(c, r, MatrixKind::Q) },
        Suite {
            name: "spectrum-outregular",
            covers: &["vertex_corona_spectrum_outregular"],
            build: spectrum_outregular,
        },
        Suite { name: "arc-corona-A", covers: &["arc_corona_charpoly"], build: |c, r| arc_suite(c, r, MatrixKind::A) },
        Suite { name: "arc-corona-L", covers: &["arc_corona_charpoly"], build: |c, r| arc_suite(c, r, MatrixKind::L) },
        Suite { name: "arc-corona-Q", covers: &["arc_corona_charpoly"], build: |c, r| arc_suite(c, r, MatrixKind::Q) },
        Suite {
            name: "symmetric-backward-arc",
            covers: &["backward-symmetric-a"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::BackwardSymmetricA),
        },
        Suite {
            name: "tournament-backward-arc",
            covers: &["backward-tournament-a"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::BackwardTournamentA),
        },
        Suite {
            name: "regular-symmetric-arc-A",
            covers: &["symmetric-regular-a"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::SymmetricRegularA),
        },
        Suite {
            name: "regular-forward-arc-L",
            covers: &["forward-regular-l"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::ForwardRegularL),
        },
        Suite {
            name: "regular-symmetric-arc-L",
            covers: &["symmetric-regular-l"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::SymmetricRegularL),
        },
        Suite {
            name: "regular-forward-arc-Q",
            covers: &["forward-regular-q"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::ForwardRegularQ),
        },
        Suite {
            name: "regular-symmetric-arc-Q",
            covers: &["symmetric-regular-q"],
            build: |c, r| corollary_suite(c, r, ArcCorollary::SymmetricRegularQ),
        },
        Suite { name: "arc-closed-selection", covers: &["arc_corona_charpoly_closed"], build: arc_closed_selection },
        Suite {
            name: "connectivity",
            covers: &["strong_connectivity_predictions"],
            build: connectivity,
        },
    ]
}

/// All candidates when exhaustive, otherwise `trials` draws with
/// replacement.
fn pick<T: Clone>(cfg: &SweepConfig, rng: &mut ChaCha8Rng, all: Vec<T>) -> Vec<T> {
    if cfg.exhaustive || all.is_empty() {
        return all;
    }
    (0..cfg.trials).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
}

fn density(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> f64 {
    let (lo, hi) = cfg.density;
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

fn random_in_budget(cfg: &SweepConfig, rng: &mut ChaCha8Rng, max: usize) -> Digraph {
    let n = rng.gen_range(1..=max.min(cfg.max_n).max(1));
    let d = density(cfg, rng);
    random_digraph(rng.gen(), n, d).expect("density validated")
}

fn dedup(mut v: Vec<Digraph>) -> Vec<Digraph> {
    let mut out: Vec<Digraph> = Vec::new();
    for d in v.drain(..) {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// Paths, cycles, empty and complete digraphs up to `max` vertices, plus
/// two random digraphs per size.
fn family_pool(cfg: &SweepConfig, rng: &mut ChaCha8Rng, max: usize) -> Vec<Digraph> {
    let mut pool = Vec::new();
    for k in 1..=max.min(cfg.max_n) {
        pool.push(Digraph::path(k));
        if k >= 2 {
            pool.push(Digraph::cycle(k));
        }
        pool.push(Digraph::empty(k));
        pool.push(Digraph::complete(k));
        for _ in 0..2 {
            let d = density(cfg, rng);
            pool.push(random_digraph(rng.gen(), k, d).expect("density validated"));
        }
    }
    dedup(pool)
}

fn symmetric_cycle(k: usize) -> Digraph {
    let c = Digraph::cycle(k);
    Digraph::new(k, c.arcs().iter().chain(c.transpose().arcs()).copied().collect::<std::collections::BTreeSet<_>>())
        .expect("valid arcs")
}

/// Digraphs inside the class a corollary asks for.
fn class_pool(cfg: &SweepConfig, rng: &mut ChaCha8Rng, corollary: ArcCorollary) -> Vec<Digraph> {
    let max = cfg.max_n.min(CORONA_VERTEX_CAP);
    let mut pool = Vec::new();
    for k in 1..=max {
        match corollary {
            ArcCorollary::BackwardSymmetricA => {
                pool.extend([Digraph::empty(k), Digraph::complete(k)]);
                if k >= 3 {
                    pool.push(symmetric_cycle(k));
                }
                for _ in 0..2 {
                    let d = density(cfg, rng);
                    pool.push(random_symmetric(rng, k, d));
                }
            }
            ArcCorollary::BackwardTournamentA => {
                if k == 2 {
                    pool.push(Digraph::path(2));
                }
                if k == 3 {
                    pool.push(Digraph::cycle(3));
                }
                for _ in 0..2 {
                    pool.push(random_tournament(rng, k));
                }
            }
            ArcCorollary::SymmetricRegularA | ArcCorollary::SymmetricRegularL | ArcCorollary::SymmetricRegularQ => {
                pool.extend([Digraph::empty(k), Digraph::complete(k)]);
                if k >= 3 {
                    pool.push(symmetric_cycle(k));
                }
            }
            ArcCorollary::ForwardRegularL | ArcCorollary::ForwardRegularQ => {
                pool.extend([Digraph::empty(k), Digraph::complete(k)]);
                if k >= 2 {
                    pool.push(Digraph::cycle(k));
                    let r = rng.gen_range(1..k);
                    pool.push(random_outregular(rng, k, r));
                }
            }
        }
    }
    dedup(pool)
}

fn vertex_pairs(pool: &[Digraph]) -> Vec<(Digraph, Digraph)> {
    let mut out = Vec::new();
    for d1 in pool {
        for d2 in pool {
            if d1.n() * (1 + d2.n()) <= CORONA_VERTEX_CAP {
                out.push((d1.clone(), d2.clone()));
            }
        }
    }
    out
}

fn arc_fits(d1: &Digraph, d2: &Digraph, dir: Direction) -> bool {
    d1.n() + arc_copy_count(d1, dir) * d2.n() <= CORONA_VERTEX_CAP
}

fn arc_triples(pool1: &[Digraph], pool2: &[Digraph], dirs: &[Direction]) -> Vec<(Digraph, Digraph, Direction)> {
    let mut out = Vec::new();
    for d1 in pool1 {
        for d2 in pool2 {
            for &dir in dirs {
                if arc_fits(d1, d2, dir) {
                    out.push((d1.clone(), d2.clone(), dir));
                }
            }
        }
    }
    out
}

fn charpoly_algorithms(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    (0..cfg.trials)
        .map(|t| {
            let n = rng.gen_range(1..=cfg.max_n.min(8));
            let m = random_int_matrix(rng, n, n, 4);
            Task::new(InstanceDescriptor::new(format!("random {n}x{n} #{t}")), move || {
                Check::compare(oracle_charpoly(&m), charpoly(&m))
            })
        })
        .collect()
}

fn coronal_algorithms(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    for t in 0..cfg.trials {
        let n = rng.gen_range(1..=cfg.max_n.min(super::CORONAL_ORACLE_CAP));
        let m = Arc::new(random_int_matrix(rng, n, n, 3));
        let m2 = m.clone();
        tasks.push(Task::new(InstanceDescriptor::new(format!("random {n}x{n} #{t}")), move || {
            Check::compare(oracle_coronal(&m), coronal(&m))
        }));
        tasks.push(Task::new(InstanceDescriptor::new(format!("transpose of random {n}x{n} #{t}")), move || {
            Check::compare(coronal(&m2), coronal(&m2.transpose()))
        }));
    }
    tasks
}

fn algebra_lemmas(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    for t in 0..cfg.trials {
        let n = rng.gen_range(2..=cfg.max_n.clamp(2, 6));
        let split = rng.gen_range(1..n);
        let m = random_rational_matrix(rng, n, n);
        tasks.push(Task::new(InstanceDescriptor::new(format!("schur {n}x{n} split {split} #{t}")), move || {
            let (m1, m2) = (m.submatrix(0, split, 0, split), m.submatrix(0, split, split, n));
            let (m3, m4) = (m.submatrix(split, n, 0, split), m.submatrix(split, n, split, n));
            match schur_block_det(&m1, &m2, &m3, &m4) {
                Err(Error::Singular) => Check::Skipped("lower-right block is singular".into()),
                actual => Check::compare(m.det(), actual),
            }
        }));
        let c = random_rational_matrix(rng, n, n);
        let alpha: Scalar = scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let (c2, alpha2) = (c.clone(), alpha.clone());
        tasks.push(Task::new(InstanceDescriptor::new(format!("rank-one det {n}x{n} #{t}")), move || {
            let updated = c.add(&ExactMatrix::all_ones(n, n).scale(&alpha));
            match rank_one_det(&c, &alpha) {
                Err(Error::Singular) => Check::Skipped("C is singular".into()),
                actual => Check::compare(updated.and_then(|u| u.det()), actual),
            }
        }));
        tasks.push(Task::new(InstanceDescriptor::new(format!("rank-one inverse {n}x{n} #{t}")), move || {
            let updated = c2.add(&ExactMatrix::all_ones(n, n).scale(&alpha2)).and_then(|u| u.inverse());
            match (updated, rank_one_inverse(&c2, &alpha2)) {
                (Err(Error::Singular), _) | (_, Err(Error::Singular)) => Check::Skipped("singular".into()),
                (e, a) => Check::compare(e, a),
            }
        }));
    }
    tasks
}

fn incidence_identities(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    for t in 0..cfg.trials {
        let d = Arc::new(random_in_budget(cfg, rng, 8));
        let label = |what: &str| InstanceDescriptor::new(format!("{what} #{t}")).factors(&d, None);
        let g = d.clone();
        tasks.push(Task::new(label("B_out B_in^T = A"), move || {
            let b = g.incidence(IncidenceKind::BOut).mul(&g.incidence(IncidenceKind::BIn).transpose());
            Check::compare(Ok(g.adjacency()), b)
        }));
        let g = d.clone();
        tasks.push(Task::new(label("B_in^T B_out = A(line digraph)"), move || {
            let b = g.incidence(IncidenceKind::BIn).transpose().mul(&g.incidence(IncidenceKind::BOut));
            Check::compare(Ok(g.line_digraph().adjacency()), b)
        }));
        let g = d.clone();
        tasks.push(Task::new(label("N N^T = L(G)"), move || {
            let n = g.incidence(IncidenceKind::NOriented);
            Check::compare(Ok(g.underlying_graph().laplacian()), n.mul(&n.transpose()))
        }));
        let g = d.clone();
        tasks.push(Task::new(label("B B^T = Q(G)"), move || {
            let b = g.incidence(IncidenceKind::BUnderlying);
            Check::compare(Ok(g.underlying_graph().signless_laplacian()), b.mul(&b.transpose()))
        }));
        let g = d.clone();
        tasks.push(Task::new(label("strong connectivity"), move || {
            Check::compare(oracle_strongly_connected(&g), g.is_strongly_connected())
        }));
    }
    tasks
}

/// Every family parameterisation with at most `max` vertices.
pub(crate) fn family_specs(max: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=max {
        for r in 0..n {
            specs.push(FamilySpec::ConstantRowSum { n, r });
        }
        specs.push(FamilySpec::Path { n });
    }
    // joins of two or three parts, as non-increasing part lists
    let parts: Vec<(usize, usize)> = (1..=max).flat_map(|n| (0..n).map(move |r| (n, r))).collect();
    for (i, &a) in parts.iter().enumerate() {
        for (j, &b) in parts.iter().enumerate().skip(i) {
            if a.0 + b.0 <= max {
                specs.push(FamilySpec::Join { parts: vec![a, b] });
            }
            for &c in parts.iter().skip(j) {
                if a.0 + b.0 + c.0 <= max {
                    specs.push(FamilySpec::Join { parts: vec![a, b, c] });
                }
            }
        }
    }
    for n1 in 1..max {
        for n2 in 1..=max - n1 {
            for r1 in 0..=n2 {
                for r2 in 0..=n1 {
                    specs.push(FamilySpec::SemiRegularBipartite { n1, n2, r1, r2 });
                }
            }
            for k in 0..=n1 * n2 {
                specs.push(FamilySpec::FullSideBipartite { n1, n2, k });
            }
        }
    }
    specs
}

fn coronal_formulas(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut cases = Vec::new();
    for spec in family_specs(cfg.max_n.min(super::CORONAL_ORACLE_CAP)) {
        for kind in MatrixKind::ALL {
            let no_formula = matches!(spec, FamilySpec::FullSideBipartite { .. }) && kind == MatrixKind::Q;
            let long_path = matches!(spec, FamilySpec::Path { n } if n > 8);
            if !no_formula && !long_path {
                cases.push((spec.clone(), kind));
            }
        }
    }
    pick(cfg, rng, cases)
        .into_iter()
        .map(|(spec, kind)| {
            let label = InstanceDescriptor::new(spec.to_string()).kind(kind);
            Task::new(label, move || {
                let expected = spec.instance().and_then(|d| oracle_coronal(&d.matrix(kind)));
                Check::compare(expected, spec.coronal(kind))
            })
        })
        .collect()
}

/// A digraph whose vertices split into blocks with a fixed number of arcs
/// from each vertex of one block into another, with shuffled labels.
fn block_regular(rng: &mut ChaCha8Rng, sizes: &[usize]) -> (Digraph, Vec<Vec<usize>>) {
    let n: usize = sizes.iter().sum();
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        labels.swap(i, rng.gen_range(0..=i));
    }
    let mut blocks = Vec::new();
    let mut next = 0;
    for &s in sizes {
        blocks.push(labels[next..next + s].to_vec());
        next += s;
    }
    let mut arcs = Vec::new();
    for (bi, from) in blocks.iter().enumerate() {
        for (bj, to) in blocks.iter().enumerate() {
            let same = bi == bj;
            let d = rng.gen_range(0..=to.len() - usize::from(same));
            let offset = if same { 1 } else { rng.gen_range(0..to.len()) };
            for (p, &u) in from.iter().enumerate() {
                for t in 0..d {
                    arcs.push((u, to[(p + offset + t) % to.len()]));
                }
            }
        }
    }
    (Digraph::new(n, arcs).expect("block arcs are valid"), blocks)
}

fn equitable_partitions(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let max = cfg.max_n.min(super::CORONAL_ORACLE_CAP);
    let mut tasks = Vec::new();
    for t in 0..cfg.trials {
        let k = rng.gen_range(1..=3.min(max));
        let mut sizes = vec![1; k];
        for _ in 0..rng.gen_range(0..=max - k) {
            let i = rng.gen_range(0..k);
            sizes[i] += 1;
        }
        let (d, blocks) = block_regular(rng, &sizes);
        let kind = MatrixKind::ALL[t % 3];
        let label = InstanceDescriptor::new(format!("blocks {blocks:?}")).factors(&d, None).kind(kind);
        let m = Arc::new(d.matrix(kind));
        let (m2, blocks2) = (m.clone(), blocks.clone());
        tasks.push(Task::new(label.clone(), move || {
            Check::compare(oracle_coronal(&m), crate::coronal::coronal_equitable(&m, blocks.clone()))
        }));
        if k == 2 {
            tasks.push(Task::new(label, move || {
                let closed = EquitablePartition::new(&m2, blocks2.clone())
                    .and_then(|p| p.two_block_closed_form().expect("two blocks"));
                Check::compare(oracle_coronal(&m2), closed)
            }));
        }
    }
    tasks
}

fn complement(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    let max = cfg.max_n.min(7);
    for t in 0..cfg.trials {
        let d = Arc::new(random_in_budget(cfg, rng, 7));
        let n = d.n();
        for kind in MatrixKind::ALL {
            let label = InstanceDescriptor::new(format!("complement #{t}")).factors(&d, None).kind(kind);
            if kind != MatrixKind::L {
                let g = d.clone();
                tasks.push(Task::new(label.clone(), move || {
                    let actual = coronal(&g.matrix(kind)).and_then(|chi| complement_coronal(&chi, n, kind));
                    Check::compare(oracle_coronal(&g.complement().matrix(kind)), actual)
                }));
            }
            let g = d.clone();
            tasks.push(Task::new(label, move || {
                let m = g.matrix(kind);
                let actual = charpoly(&m).and_then(|f| {
                    let chi = if kind == MatrixKind::L { None } else { Some(coronal(&m)?) };
                    complement_charpoly(&f, chi.as_ref(), n, kind)
                });
                Check::compare(oracle_charpoly(&g.complement().matrix(kind)), actual)
            }));
        }
        // out-regular shortcut
        let k = rng.gen_range(1..=max);
        let r = rng.gen_range(0..k);
        let reg = Arc::new(random_outregular(rng, k, r));
        for kind in MatrixKind::ALL {
            let g = reg.clone();
            let label = InstanceDescriptor::new(format!("{r}-out-regular complement #{t}")).factors(&g, None).kind(kind);
            tasks.push(Task::new(label, move || {
                let actual = charpoly(&g.matrix(kind)).and_then(|f| complement_charpoly_outregular(&f, k, r, kind));
                Check::compare(oracle_charpoly(&g.complement().matrix(kind)), actual)
            }));
        }
        // aM + bJ + cI
        let nonzero = |rng: &mut ChaCha8Rng| loop {
            let a = scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
            if !num_traits::Zero::is_zero(&a) {
                break a;
            }
        };
        let a = nonzero(rng);
        let b = scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        let c = scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        let kind = MatrixKind::ALL[t % 3];
        let m = Arc::new(d.matrix(kind));
        let target = Arc::new(
            m.scale(&a)
                .add(&ExactMatrix::all_ones(n, n).scale(&b))
                .and_then(|x| x.add(&ExactMatrix::identity(n).scale(&c)))
                .expect("same shape"),
        );
        let label = InstanceDescriptor::new(format!(
            "affine a={} b={} c={} #{t}",
            scalar::to_text(&a),
            scalar::to_text(&b),
            scalar::to_text(&c)
        ))
        .factors(&d, None)
        .kind(kind);
        let (m2, target2, a2, b2, c2) = (m.clone(), target.clone(), a.clone(), b.clone(), c.clone());
        tasks.push(Task::new(label.clone(), move || {
            let actual = coronal(&m).and_then(|chi| coronal_affine(&chi, &a, &b, &c));
            Check::compare(oracle_coronal(&target), actual)
        }));
        tasks.push(Task::new(label, move || {
            let actual = charpoly(&m2).and_then(|f| charpoly_affine(&f, &coronal(&m2)?, &a2, &b2, &c2, n));
            Check::compare(oracle_charpoly(&target2), actual)
        }));
    }
    tasks
}

fn kron_schur(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    (0..cfg.trials)
        .map(|t| {
            let n1 = rng.gen_range(1..=3.min(cfg.max_n));
            let n2 = rng.gen_range(1..=3.min(cfg.max_n));
            let r = rng.gen_range(1..=3);
            let m1 = random_int_matrix(rng, n1, n1, 2);
            let m2 = random_int_matrix(rng, n2, n2, 2);
            let b1 = random_int_matrix(rng, n1, r, 1);
            let b2 = random_int_matrix(rng, r, n1, 1);
            let negate = rng.gen_bool(0.5);
            let label = InstanceDescriptor::new(format!("n1={n1} n2={n2} r={r} #{t}"));
            Task::new(label, move || {
                let block = kron_schur_block(&m1, &m2, &b1, &b2, negate);
                Check::compare(block.and_then(|b| oracle_charpoly(&b)), kron_schur_charpoly(&m1, &m2, &b1, &b2))
            })
        })
        .collect()
}

fn corona_oracle(d1: &Digraph, d2: &Digraph, kind: CoronaKind, matrix: MatrixKind) -> crate::Result<crate::Polynomial> {
    oracle_charpoly(&corona(d1, d2, kind)?.matrix(matrix))
}

fn vertex_suite(cfg: &SweepConfig, rng: &mut ChaCha8Rng, kind: MatrixKind) -> Vec<Task> {
    let pool = family_pool(cfg, rng, CORONA_VERTEX_CAP);
    let sym = CoronaKind::new(CoronaOp::Vertex, Direction::Symmetric);
    pick(cfg, rng, vertex_pairs(&pool))
        .into_iter()
        .map(|(d1, d2)| {
            let label = InstanceDescriptor::new(format!("{sym}")).factors(&d1, Some(&d2)).corona(sym).kind(kind);
            Task::new(label, move || {
                Check::compare(corona_oracle(&d1, &d2, sym, kind), vertex_corona_charpoly(&d1, &d2, kind))
            })
        })
        .collect()
}

fn spectrum_outregular(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let d2s: Vec<Digraph> = [Digraph::cycle(2), Digraph::cycle(3), Digraph::cycle(4), Digraph::complete(3)]
        .into_iter()
        .filter(|d| d.n() <= cfg.max_n)
        .collect();
    let pool = family_pool(cfg, rng, 3);
    let mut cases = Vec::new();
    for d1 in &pool {
        for d2 in &d2s {
            for kind in MatrixKind::ALL {
                cases.push((d1.clone(), d2.clone(), kind));
            }
        }
    }
    let sym = CoronaKind::new(CoronaOp::Vertex, Direction::Symmetric);
    pick(cfg, rng, cases)
        .into_iter()
        .map(|(d1, d2, kind)| {
            let label = InstanceDescriptor::new("spectrum re-expansion").factors(&d1, Some(&d2)).corona(sym).kind(kind);
            Task::new(label, move || {
                let actual = vertex_corona_spectrum_outregular(&d1, &d2, kind).and_then(|s| s.expand());
                Check::compare(corona_oracle(&d1, &d2, sym, kind), actual)
            })
        })
        .collect()
}

fn arc_suite(cfg: &SweepConfig, rng: &mut ChaCha8Rng, kind: MatrixKind) -> Vec<Task> {
    let pool = family_pool(cfg, rng, CORONA_VERTEX_CAP);
    pick(cfg, rng, arc_triples(&pool, &pool, &Direction::ALL))
        .into_iter()
        .map(|(d1, d2, dir)| {
            let ck = CoronaKind::new(CoronaOp::Arc, dir);
            let label = InstanceDescriptor::new(format!("{ck}")).factors(&d1, Some(&d2)).corona(ck).kind(kind);
            Task::new(label, move || {
                Check::compare(corona_oracle(&d1, &d2, ck, kind), arc_corona_charpoly(&d1, &d2, dir, kind))
            })
        })
        .collect()
}

fn corollary_suite(cfg: &SweepConfig, rng: &mut ChaCha8Rng, corollary: ArcCorollary) -> Vec<Task> {
    let mut d1s = class_pool(cfg, rng, corollary);
    if cfg.exhaustive {
        d1s = dedup(d1s.into_iter().chain(family_pool(cfg, rng, CORONA_VERTEX_CAP)).collect());
    }
    let d2s = family_pool(cfg, rng, CORONA_VERTEX_CAP);
    let (dir, kind) = (corollary.direction(), corollary.kind());
    let ck = CoronaKind::new(CoronaOp::Arc, dir);
    pick(cfg, rng, arc_triples(&d1s, &d2s, &[dir]))
        .into_iter()
        .map(|(d1, d2, _)| {
            let label = InstanceDescriptor::new(corollary.name()).factors(&d1, Some(&d2)).corona(ck).kind(kind);
            Task::new(label, move || match arc_corona_charpoly_corollary(&d1, &d2, corollary) {
                Ok(ClosedForm::Polynomial { charpoly, .. }) => {
                    Check::compare(arc_corona_charpoly(&d1, &d2, dir, kind), Ok(charpoly))
                }
                Ok(ClosedForm::HypothesisFailed { reason, .. }) => Check::HypothesisViolated(reason),
                Ok(ClosedForm::NoClosedForm { reason }) => Check::Skipped(reason),
                Err(e) => Check::compare(arc_corona_charpoly(&d1, &d2, dir, kind), Err::<crate::Polynomial, _>(e)),
            })
        })
        .collect()
}

fn arc_closed_selection(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut d1s = family_pool(cfg, rng, CORONA_VERTEX_CAP);
    d1s.extend(class_pool(cfg, rng, ArcCorollary::BackwardTournamentA));
    d1s.extend(class_pool(cfg, rng, ArcCorollary::SymmetricRegularA));
    let d1s = dedup(d1s);
    let d2s = family_pool(cfg, rng, 3);
    let mut cases = Vec::new();
    for (d1, d2, dir) in arc_triples(&d1s, &d2s, &Direction::ALL) {
        for kind in MatrixKind::ALL {
            cases.push((d1.clone(), d2.clone(), dir, kind));
        }
    }
    pick(cfg, rng, cases)
        .into_iter()
        .map(|(d1, d2, dir, kind)| {
            let ck = CoronaKind::new(CoronaOp::Arc, dir);
            let label = InstanceDescriptor::new("closed-form selection").factors(&d1, Some(&d2)).corona(ck).kind(kind);
            Task::new(label, move || match arc_corona_charpoly_closed(&d1, &d2, dir, kind) {
                Ok(ClosedForm::Polynomial { charpoly, .. }) => {
                    Check::compare(arc_corona_charpoly(&d1, &d2, dir, kind), Ok(charpoly))
                }
                Ok(ClosedForm::NoClosedForm { reason }) | Ok(ClosedForm::HypothesisFailed { reason, .. }) => {
                    Check::HypothesisViolated(reason)
                }
                Err(e) => Check::compare(arc_corona_charpoly(&d1, &d2, dir, kind), Err::<crate::Polynomial, _>(e)),
            })
        })
        .collect()
}

fn connectivity(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    for t in 0..cfg.trials {
        let d1 = random_in_budget(cfg, rng, 5);
        let d2 = random_in_budget(cfg, rng, 3);
        for kind in CoronaKind::ALL {
            let (d1, d2) = (d1.clone(), d2.clone());
            let label = InstanceDescriptor::new(format!("{kind} #{t}")).factors(&d1, Some(&d2)).corona(kind);
            tasks.push(Task::new(label, move || {
                let built = corona(&d1, &d2, kind);
                Check::compare(
                    built.and_then(|b| oracle_strongly_connected(&b)),
                    strong_connectivity_predictions(&d1, &d2, kind),
                )
            }));
        }
    }
    tasks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_every_op() {
        let all = suites();
        for op in COVERED_OPS {
            assert!(all.iter().any(|s| s.covers.contains(op)), "{op} not covered");
        }
        let mut names: Vec<_> = all.iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn block_regular_is_equitable() {
        let mut rng = rand::SeedableRng::seed_from_u64(9);
        for _ in 0..20 {
            let (d, blocks) = block_regular(&mut rng, &[2, 3, 1]);
            for kind in MatrixKind::ALL {
                assert!(EquitablePartition::new(&d.matrix(kind), blocks.clone()).is_ok());
            }
        }
    }

    #[test]
    fn family_specs_are_valid() {
        for spec in family_specs(6) {
            let d = spec.instance().unwrap();
            assert_eq!(d.n(), spec.vertex_count(), "{spec}");
        }
    }
}
