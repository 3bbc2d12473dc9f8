//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::scalar;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Each ordered pair `(u, v)`, `u != v`, taken in lexicographic order, is an
/// arc with probability `density`.
pub fn random_digraph(seed: u64, n: usize, density: f64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Domain(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Digraph::new(n, arcs)
}

pub(crate) fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    Digraph::new(n, arcs).expect("valid arcs")
}

pub(crate) fn random_tournament(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    Digraph::new(n, arcs).expect("valid arcs")
}

/// Every vertex picks `r` distinct out-neighbours.
pub(crate) fn random_outregular(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        for i in 0..r {
            let j = rng.gen_range(i..others.len());
            others.swap(i, j);
            arcs.push((u, others[i]));
        }
    }
    Digraph::new(n, arcs).expect("valid arcs")
}

pub(crate) fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| scalar::int(rng.gen_range(-bound..=bound)))
}

pub(crate) fn random_rational_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| {
        scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes_and_determinism() {
        assert_eq!(random_digraph(7, 5, 0.0).unwrap(), Digraph::empty(5));
        assert_eq!(random_digraph(7, 5, 1.0).unwrap(), Digraph::complete(5));
        assert_eq!(random_digraph(42, 4, 0.5).unwrap(), random_digraph(42, 4, 0.5).unwrap());
        assert!(random_digraph(1, 3, 1.5).is_err());
    }

    #[test]
    fn shaped_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(random_symmetric(&mut rng, 6, 0.5).is_symmetric());
        assert!(random_tournament(&mut rng, 5).is_tournament());
        assert_eq!(random_outregular(&mut rng, 6, 2).out_regular(), Some(2));
    }
}
