//! Equitable partitions supplied by the caller and checked against a matrix.

use serde::Serialize;

use crate::algebra::matrix::{ExactMatrix, FunctionMatrix, Matrix};
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquitablePartition {
    blocks: Vec<Vec<usize>>,
    quotient: ExactMatrix,
}

impl EquitablePartition {
    /// Checks that `blocks` partition the rows of `m` and that every block of
    /// `m` has constant row sums.
    pub fn new(m: &ExactMatrix, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = m.require_square()?;
        if n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let mut owner = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} in block {b} is out of range for {n} vertices"
                    )));
                }
                if let Some(other) = owner[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in blocks {other} and {b}"
                    )));
                }
                owner[v] = Some(b);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no block")));
        }
        let k = blocks.len();
        let row_sum = |v: usize, block: &[usize]| -> Scalar {
            block.iter().map(|&w| m.get(v, w)).sum()
        };
        let mut quotient = ExactMatrix::zeros(k, k);
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                let expected = row_sum(bi[0], bj);
                for &v in &bi[1..] {
                    let got = row_sum(v, bj);
                    if got != expected {
                        return Err(Error::InvalidPartition(format!(
                            "vertex {v} of block {i} has row sum {got} into block {j}, \
                             but vertex {} has {expected}",
                            bi[0]
                        )));
                    }
                }
                quotient.set(i, j, expected);
            }
        }
        Ok(Self { blocks, quotient })
    }

    /// Parses `"0,1|2,3"`: blocks separated by `|`, vertices by `,`.
    pub fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>> {
        text.split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| {
                            Error::InvalidPartition(format!("bad vertex {:?} in {text:?}", v.trim()))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn quotient(&self) -> &ExactMatrix {
        &self.quotient
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// `[n_1 … n_k] (λI - R)⁻¹ 1`.
    pub fn coronal(&self) -> Result<RationalFunction> {
        let k = self.blocks.len();
        let base: FunctionMatrix = self.quotient.resolvent_base()?;
        let x = base.solve(&Matrix::ones(k))?;
        let mut total = RationalFunction::zero();
        for (i, size) in self.sizes().into_iter().enumerate() {
            total = &total + &x.get(i, 0).scale(&scalar::int(size as i64));
        }
        Ok(total)
    }

    /// The explicit two-block formula; `None` unless there are two blocks.
    pub fn two_block_closed_form(&self) -> Option<Result<RationalFunction>> {
        if self.blocks.len() != 2 {
            return None;
        }
        let r = |i, j| self.quotient.get(i, j).clone();
        let (n1, n2) = (
            scalar::int(self.blocks[0].len() as i64),
            scalar::int(self.blocks[1].len() as i64),
        );
        let num = Polynomial::from_coeffs(vec![
            &n1 * (r(0, 1) - r(1, 1)) + &n2 * (r(1, 0) - r(0, 0)),
            &n1 + &n2,
        ]);
        let den = Polynomial::from_coeffs(vec![
            r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0),
            -(r(0, 0) + r(1, 1)),
            scalar::one(),
        ]);
        Some(RationalFunction::new(num, den))
    }
}

/// Coronal of `m` through a caller-supplied equitable partition.
pub fn coronal_equitable(m: &ExactMatrix, blocks: Vec<Vec<usize>>) -> Result<RationalFunction> {
    EquitablePartition::new(m, blocks)?.coronal()
}
