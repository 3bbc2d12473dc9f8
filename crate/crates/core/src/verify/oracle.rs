//! Brute-force oracles sharing no code with the main algebra paths.

use crate::algebra::matrix::ExactMatrix;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{self, Scalar};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest matrix the cofactor coronal oracle accepts.
pub const CORONAL_ORACLE_CAP: usize = 9;

/// Characteristic polynomial by Berkowitz's division-free algorithm.
pub fn oracle_charpoly(m: &ExactMatrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    // descending coefficients of the charpoly of the leading r×r block
    let mut v: Vec<Scalar> = vec![scalar::one()];
    for r in 0..n {
        let a = m.get(r, r).clone();
        let row: Vec<Scalar> = (0..r).map(|j| m.get(r, j).clone()).collect();
        let mut col: Vec<Scalar> = (0..r).map(|i| m.get(i, r).clone()).collect();
        // first column of the Toeplitz matrix: 1, -a, -R·C, -R·A·C, ...
        let mut t = vec![scalar::one(), -a];
        for _ in 0..r {
            t.push(-dot(&row, &col));
            col = (0..r)
                .map(|i| dot(&(0..r).map(|j| m.get(i, j).clone()).collect::<Vec<_>>(), &col))
                .collect();
        }
        let next: Vec<Scalar> = (0..=r + 1)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
        v = next;
    }
    v.reverse();
    Ok(Polynomial::from_coeffs(v))
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `det` by Laplace expansion over column subsets.
fn laplace_det(entries: &[Vec<Polynomial>]) -> Polynomial {
    let n = entries.len();
    let mut dp = vec![Polynomial::zero(); 1 << n];
    dp[0] = Polynomial::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for c in (0..n).filter(|c| mask & (1 << c) == 0) {
            let e = &entries[row][c];
            if e.is_zero() {
                continue;
            }
            let term = &dp[mask] * e;
            // each earlier row sitting in a larger column is an inversion
            let inversions = (mask >> (c + 1)).count_ones();
            let slot = mask | (1 << c);
            dp[slot] = if inversions % 2 == 0 {
                &dp[slot] + &term
            } else {
                &dp[slot] - &term
            };
        }
    }
    dp[(1 << n) - 1].clone()
}

/// `1ᵀ(λI - M)⁻¹1` as `Σ_j det(λI - M with column j replaced by 1)`
/// over `det(λI - M)`, both by cofactor expansion.
pub fn oracle_coronal(m: &ExactMatrix) -> Result<RationalFunction> {
    let n = m.require_square()?;
    if n == 0 {
        return Err(Error::Domain("coronal of an empty matrix".into()));
    }
    if n > CORONAL_ORACLE_CAP {
        return Err(Error::OverBudget { size: n, cap: CORONAL_ORACLE_CAP });
    }
    let base: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(-m.get(i, j));
                    if i == j {
                        &c + &Polynomial::lambda()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let mut num = Polynomial::zero();
    for j in 0..n {
        let mut replaced = base.clone();
        for row in &mut replaced {
            row[j] = Polynomial::one();
        }
        num = &num + &laplace_det(&replaced);
    }
    RationalFunction::new(num, laplace_det(&base))
}

/// Strong connectivity by Warshall's transitive closure.
pub fn oracle_strongly_connected(d: &Digraph) -> Result<bool> {
    let n = d.n();
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(u, v) in d.arcs() {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    Ok(reach.iter().all(|row| row.iter().all(|&x| x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{charpoly, coronal};

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            oracle_charpoly(&Digraph::cycle(3).adjacency()).unwrap(),
            Polynomial::from_i64(&[-1, 0, 0, 1])
        );
        assert_eq!(
            oracle_charpoly(&ExactMatrix::identity(4)).unwrap(),
            Polynomial::from_i64(&[-1, 1]).pow(4)
        );
        let m = ExactMatrix::from_i64_rows(&[
            &[2, -1, 0, 3, 1],
            &[0, 4, -2, 1, 0],
            &[1, 1, 1, -1, 2],
            &[-3, 0, 2, 0, 1],
            &[5, 2, -1, 1, -2],
        ]);
        assert_eq!(oracle_charpoly(&m).unwrap(), charpoly(&m).unwrap());
        assert_eq!(oracle_charpoly(&ExactMatrix::zeros(0, 0)).unwrap(), Polynomial::one());
        assert!(oracle_charpoly(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn coronal_examples() {
        let p2 = oracle_coronal(&Digraph::path(2).adjacency()).unwrap();
        assert_eq!(p2, RationalFunction::new(Polynomial::from_i64(&[1, 2]), Polynomial::from_i64(&[0, 0, 1])).unwrap());
        let zero = oracle_coronal(&ExactMatrix::zeros(3, 3)).unwrap();
        assert_eq!(zero, RationalFunction::new(Polynomial::from_i64(&[3]), Polynomial::lambda()).unwrap());
        let d = Digraph::new(4, [(0, 1), (0, 3), (2, 1), (3, 2)]).unwrap();
        let l = d.matrix(crate::MatrixKind::L);
        assert_eq!(oracle_coronal(&l).unwrap(), RationalFunction::new(Polynomial::from_i64(&[4]), Polynomial::lambda()).unwrap());
        let q = d.matrix(crate::MatrixKind::Q);
        assert_eq!(oracle_coronal(&q).unwrap(), coronal(&q).unwrap());
        assert!(matches!(
            oracle_coronal(&ExactMatrix::zeros(10, 10)),
            Err(Error::OverBudget { size: 10, cap: 9 })
        ));
    }

    #[test]
    fn reachability() {
        assert!(oracle_strongly_connected(&Digraph::cycle(4)).unwrap());
        assert!(!oracle_strongly_connected(&Digraph::path(4)).unwrap());
        assert!(oracle_strongly_connected(&Digraph::empty(1)).unwrap());
        assert!(oracle_strongly_connected(&Digraph::empty(0)).is_err());
    }
}
