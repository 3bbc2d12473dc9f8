//! Block matrices of the form
//!
//! ```text
//! [ M1         ±(1ᵀ ⊗ B1) ]
//! [ ±(1 ⊗ B2)  M2 ⊗ I_r   ]
//! ```
//!
//! whose characteristic polynomial is
//! `f_M2(λ)^r · det(λI - M1 - χ_M2(λ)·B1B2)`.

use num_traits::Zero;

use crate::algebra::matrix::{ExactMatrix, Matrix, PolyMatrix};
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::Resolvent;
use crate::algebra::scalar;
use crate::error::{Error, Result};

/// Assembles the block matrix. `B1` is `n1 × r`, `B2` is `r × n1`; lower
/// index `k·r + c` is vertex `k` of `M2` in copy `c`.
pub fn kron_schur_block(
    m1: &ExactMatrix,
    m2: &ExactMatrix,
    b1: &ExactMatrix,
    b2: &ExactMatrix,
    negate: bool,
) -> Result<ExactMatrix> {
    let n1 = m1.require_square()?;
    let n2 = m2.require_square()?;
    let r = b1.cols();
    if r == 0 {
        return Err(Error::Domain("need at least one copy (r >= 1)".into()));
    }
    if b1.rows() != n1 || b2.rows() != r || b2.cols() != n1 {
        return Err(Error::DimensionMismatch(format!(
            "B1 is {}x{}, B2 is {}x{}, M1 is {n1}x{n1}",
            b1.rows(),
            b1.cols(),
            b2.rows(),
            b2.cols()
        )));
    }
    let sign = |m: ExactMatrix| if negate { m.neg() } else { m };
    let upper = sign(ExactMatrix::all_ones(1, n2).kronecker(b1));
    let lower = sign(ExactMatrix::all_ones(n2, 1).kronecker(b2));
    Matrix::block(m1, &upper, &lower, &m2.kronecker(&ExactMatrix::identity(r)))
}

/// The characteristic polynomial of [`kron_schur_block`] through the
/// coronal of `M2`.
pub fn kron_schur_charpoly(
    m1: &ExactMatrix,
    m2: &ExactMatrix,
    b1: &ExactMatrix,
    b2: &ExactMatrix,
) -> Result<Polynomial> {
    let n1 = m1.require_square()?;
    let n2 = m2.require_square()?;
    let r = b1.cols();
    if r == 0 {
        return Err(Error::Domain("need at least one copy (r >= 1)".into()));
    }
    let c = b1.mul(b2)?;
    if c.rows() != n1 || c.cols() != n1 {
        return Err(Error::DimensionMismatch(format!(
            "B1·B2 is {}x{}, expected {n1}x{n1}",
            c.rows(),
            c.cols()
        )));
    }
    let res = Resolvent::new(m2)?;
    let det = pencil_det(m1, &res.coronal()?, &c)?;
    let value = &RationalFunction::from_poly(res.charpoly().pow(r)) * &det;
    super::clear(value, n1 + r * n2, "block characteristic polynomial")
}

/// `det(λI - M - χ(λ)K)` for a rational function `χ = p/q`. Rows where `K`
/// is nonzero are multiplied through by `q`, the determinant is taken with
/// fraction-free elimination and the `q` powers are divided back out.
pub fn pencil_det(m: &ExactMatrix, chi: &RationalFunction, k: &ExactMatrix) -> Result<RationalFunction> {
    let n = m.require_square()?;
    if k.rows() != n || k.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "pencil of a {n}x{n} matrix with a {}x{} matrix",
            k.rows(),
            k.cols()
        )));
    }
    let (p, q) = (chi.num(), chi.den());
    let scaled: Vec<bool> = (0..n).map(|i| k.row(i).iter().any(|x| !x.is_zero())).collect();
    let pencil: PolyMatrix = Matrix::from_fn(n, n, |i, j| {
        let mut e = Polynomial::constant(-m.get(i, j));
        if i == j {
            e = &e + &Polynomial::lambda();
        }
        if scaled[i] {
            &(&e * q) - &p.scale(k.get(i, j))
        } else {
            e
        }
    });
    let det = pencil.det_bareiss()?;
    RationalFunction::new(det, q.pow(scaled.iter().filter(|&&s| s).count()))
}

/// `f(λ - s)`, the characteristic polynomial of `M + sI`.
pub(crate) fn shifted(f: &Polynomial, s: i64) -> Polynomial {
    f.shift(&scalar::int(-s))
}
