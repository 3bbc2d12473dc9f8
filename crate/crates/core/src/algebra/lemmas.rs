//! Block and rank-one determinant identities as executable transforms.

use super::matrix::{Field, Matrix};
use crate::error::{Error, Result};

/// `det [[m1, m2], [m3, m4]] = det(m4)·det(m1 - m2·m4⁻¹·m3)`.
///
/// `m4` must be invertible over the field; a singular `m4` is an error
/// rather than a fallback to direct elimination.
pub fn schur_block_det<F: Field>(
    m1: &Matrix<F>,
    m2: &Matrix<F>,
    m3: &Matrix<F>,
    m4: &Matrix<F>,
) -> Result<F> {
    let p = m1.require_square()?;
    let q = m4.require_square()?;
    if m2.rows() != p || m2.cols() != q || m3.rows() != q || m3.cols() != p {
        return Err(Error::DimensionMismatch(format!(
            "blocks {p}x{p}, {}x{}, {}x{}, {q}x{q}",
            m2.rows(),
            m2.cols(),
            m3.rows(),
            m3.cols()
        )));
    }
    let det4 = m4.det()?;
    if det4.is_zero() {
        return Err(Error::Singular);
    }
    let x = m4.solve(m3)?;
    let complement = m1.sub(&m2.mul(&x)?)?;
    Ok(det4.mul(&complement.det()?))
}

/// `1ᵀ C⁻¹ 1`.
fn ones_form<F: Field>(c: &Matrix<F>) -> Result<F> {
    let n = c.require_square()?;
    Ok(c.solve(&Matrix::ones(n))?.entry_sum())
}

/// `det(C + αJ) = det(C)·(1 + α·1ᵀC⁻¹1)` for invertible `C`.
pub fn rank_one_det<F: Field>(c: &Matrix<F>, alpha: &F) -> Result<F> {
    let det = c.det()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    if alpha.is_zero() {
        return Ok(det);
    }
    let factor = F::one().add(&alpha.mul(&ones_form(c)?));
    Ok(det.mul(&factor))
}

/// `(C + αJ)⁻¹ = C⁻¹ - α·C⁻¹JC⁻¹ / (1 + α·1ᵀC⁻¹1)`.
pub fn rank_one_inverse<F: Field>(c: &Matrix<F>, alpha: &F) -> Result<Matrix<F>> {
    let n = c.require_square()?;
    let c_inv = c.inverse()?;
    if alpha.is_zero() {
        return Ok(c_inv);
    }
    let denom = F::one().add(&alpha.mul(&c_inv.entry_sum()));
    let denom_inv = denom.inv().ok_or_else(|| {
        Error::Domain("1 + α·1ᵀC⁻¹1 vanishes; C + αJ is singular".into())
    })?;
    let ones = Matrix::<F>::all_ones(n, n);
    let correction = c_inv.mul(&ones)?.mul(&c_inv)?.scale(&alpha.mul(&denom_inv));
    c_inv.sub(&correction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::{ExactMatrix, FunctionMatrix};
    use crate::algebra::poly::Polynomial;
    use crate::algebra::ratfunc::RationalFunction;
    use crate::algebra::scalar::int;

    #[test]
    fn schur_small_cases() {
        let one = ExactMatrix::identity(1);
        let zero = ExactMatrix::zeros(1, 1);
        assert_eq!(schur_block_det(&one, &zero, &zero, &one).unwrap(), int(1));
        // [[a, b], [c, d]] with d != 0 gives ad - bc
        let s = |v| ExactMatrix::from_i64_rows(&[&[v]]);
        assert_eq!(
            schur_block_det(&s(3), &s(5), &s(7), &s(2)).unwrap(),
            int(3 * 2 - 5 * 7)
        );
        assert_eq!(
            schur_block_det(&s(3), &s(5), &s(7), &s(0)),
            Err(Error::Singular)
        );
    }

    #[test]
    fn rank_one_scalar() {
        let c = ExactMatrix::identity(2);
        assert_eq!(rank_one_det(&c, &int(1)).unwrap(), int(3));
        let direct = ExactMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(direct.det().unwrap(), int(3));
        assert_eq!(rank_one_inverse(&c, &int(1)).unwrap(), direct.inverse().unwrap());
        assert_eq!(rank_one_inverse(&c, &int(0)).unwrap(), c);
        // I_2 - J_2/2 is singular: 1 + α·1ᵀC⁻¹1 = 0 at α = -1/2
        assert!(rank_one_inverse(&c, &crate::algebra::scalar::ratio(-1, 2)).is_err());
    }

    #[test]
    fn rank_one_over_function_field() {
        // C = λI - A(C_3), α = -1 gives λI - A(C_3) - J.
        let a = ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let c: FunctionMatrix = a.resolvent_base().unwrap();
        let alpha = RationalFunction::constant(int(-1));
        let shifted = c.add(&FunctionMatrix::all_ones(3, 3).scale(&alpha)).unwrap();
        let direct = shifted.det().unwrap();
        assert_eq!(rank_one_det(&c, &alpha).unwrap(), direct);
        // det(λI - A - J) = λ³ - 3λ² - 3λ - 1 - ... check against explicit value
        let expected = crate::algebra::charpoly::charpoly(
            &a.add(&ExactMatrix::all_ones(3, 3)).unwrap(),
        )
        .unwrap();
        assert_eq!(direct, RationalFunction::from_poly(expected));
        assert_eq!(
            rank_one_inverse(&c, &alpha).unwrap(),
            shifted.inverse().unwrap()
        );
        let _ = Polynomial::lambda();
    }
}
