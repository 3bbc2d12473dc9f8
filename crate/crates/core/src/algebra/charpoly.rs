//! Characteristic polynomials and coronals by Faddeev–LeVerrier.
//!
//! The recurrence
//!
//! ```text
//! N_1 = I,  c_{n-1} = -tr(M)
//! N_k = M·N_{k-1} + c_{n-k+1}·I,  c_{n-k} = -tr(M·N_k)/k
//! ```
//!
//! produces the coefficients of `det(λI - M)` together with the matrices
//! `N_k`, which are the coefficients of the adjugate:
//! `adj(λI - M) = Σ_k N_k λ^(n-k)`. The coronal `1ᵀ(λI - M)⁻¹1` is then the
//! ratio of `Σ_k (1ᵀN_k1) λ^(n-k)` and the characteristic polynomial.

use super::matrix::{ExactMatrix, PolyMatrix};
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Resolvent {
    charpoly: Polynomial,
    /// `adjugate_terms[k-1] = N_k`, the coefficient of `λ^(n-k)`.
    adjugate_terms: Vec<ExactMatrix>,
}

impl Resolvent {
    pub fn new(m: &ExactMatrix) -> Result<Self> {
        let n = m.require_square()?;
        let mut coeffs = vec![scalar::zero(); n + 1];
        coeffs[n] = scalar::one();
        let mut terms = Vec::with_capacity(n);
        // M·N_{k-1}, kept from the previous step's trace
        let mut prev_product: Option<ExactMatrix> = None;
        for k in 1..=n {
            let nk = match prev_product.take() {
                None => ExactMatrix::identity(n),
                Some(mut t) => {
                    let c = &coeffs[n - k + 1];
                    for i in 0..n {
                        let v = t.get(i, i) + c;
                        t.set(i, i, v);
                    }
                    t
                }
            };
            let product = m.mul(&nk)?;
            coeffs[n - k] = -product.trace() / scalar::int(k as i64);
            terms.push(nk);
            prev_product = Some(product);
        }
        Ok(Self {
            charpoly: Polynomial::from_coeffs(coeffs),
            adjugate_terms: terms,
        })
    }

    pub fn charpoly(&self) -> &Polynomial {
        &self.charpoly
    }

    pub fn dim(&self) -> usize {
        self.adjugate_terms.len()
    }

    /// `adj(λI - M)` as a polynomial matrix.
    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.dim();
        PolyMatrix::from_fn(n, n, |i, j| {
            Polynomial::from_coeffs(
                (0..n)
                    .map(|p| self.adjugate_terms[n - 1 - p].get(i, j).clone())
                    .collect(),
            )
        })
    }

    /// `1ᵀ adj(λI - M) 1`.
    pub fn adjugate_sum(&self) -> Polynomial {
        let n = self.dim();
        Polynomial::from_coeffs(
            (0..n)
                .map(|p| self.adjugate_terms[n - 1 - p].entry_sum())
                .collect::<Vec<Scalar>>(),
        )
    }

    pub fn coronal(&self) -> Result<RationalFunction> {
        if self.dim() == 0 {
            return Err(Error::Domain("coronal of a 0x0 matrix".into()));
        }
        RationalFunction::new(self.adjugate_sum(), self.charpoly.clone())
    }
}

/// `det(λI - M)`, monic of degree `n`.
pub fn charpoly(m: &ExactMatrix) -> Result<Polynomial> {
    Ok(Resolvent::new(m)?.charpoly)
}

/// `χ_M(λ) = 1ᵀ(λI - M)⁻¹1`, reduced.
pub fn coronal(m: &ExactMatrix) -> Result<RationalFunction> {
    Resolvent::new(m)?.coronal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::Matrix;
    use crate::algebra::scalar::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    fn cycle3() -> ExactMatrix {
        ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
    }

    #[test]
    fn charpoly_examples() {
        // strictly upper triangular path adjacency
        let path = ExactMatrix::from_fn(4, 4, |i, j| if j == i + 1 { int(1) } else { int(0) });
        assert_eq!(charpoly(&path).unwrap(), Polynomial::monomial(int(1), 4));
        assert_eq!(charpoly(&cycle3()).unwrap(), p(&[-1, 0, 0, 1]));
        let lap = ExactMatrix::from_i64_rows(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]);
        assert_eq!(charpoly(&lap).unwrap(), p(&[0, 3, -3, 1]));
        assert!(matches!(
            charpoly(&ExactMatrix::zeros(1, 2)),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn coronal_examples() {
        assert_eq!(coronal(&ExactMatrix::zeros(4, 4)).unwrap(), rf(&[4], &[0, 1]));
        assert_eq!(coronal(&cycle3()).unwrap(), rf(&[3], &[-1, 1]));
        let p2 = ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(coronal(&p2).unwrap(), rf(&[1, 2], &[0, 0, 1]));
        assert!(coronal(&ExactMatrix::zeros(0, 0)).is_err());
    }

    #[test]
    fn adjugate_inverts_char_matrix() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 2, 0], &[-1, 0, 3], &[2, 1, 1]]);
        let r = Resolvent::new(&m).unwrap();
        let prod = PolyMatrix::char_matrix(&m).unwrap().mul(&r.adjugate()).unwrap();
        let expected: PolyMatrix = Matrix::identity(3).scale(r.charpoly());
        assert_eq!(prod, expected);
        assert_eq!(r.adjugate().entry_sum(), r.adjugate_sum());
    }
}
