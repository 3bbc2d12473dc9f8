//! Rational functions in λ, kept in a canonical reduced form.
//!
//! Invariants: the denominator is nonzero and monic, and numerator and
//! denominator are coprime. Zero is `0/1`. Under these invariants two
//! rational functions are equal exactly when their fields are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduce `num/den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc == scalar::one() {
            Ok(Self { num, den })
        } else {
            let inv = lc.recip();
            Ok(Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn lambda() -> Self {
        Self::from_poly(Polynomial::lambda())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial this function equals, or an error naming `context`.
    pub fn into_polynomial(self, context: &str) -> Result<Polynomial> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial(format!(
                "{context}: leftover denominator {}",
                self.den
            )))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    pub fn pow(&self, exp: usize) -> Self {
        // Powers of coprime polynomials stay coprime and monic stays monic.
        Self {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if d == scalar::zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// `self(arg(λ))`.
    pub fn compose(&self, arg: &Self) -> Result<Self> {
        let num = compose_poly_with_ratfunc(&self.num, arg);
        let den = compose_poly_with_ratfunc(&self.den, arg);
        num.checked_div(&den)
    }

    /// `self(a·λ + b)`.
    pub fn affine_substitute(&self, a: &Scalar, b: &Scalar) -> Result<Self> {
        Self::new(
            self.num.affine_substitute(a, b),
            self.den.affine_substitute(a, b),
        )
    }
}

/// `f(p/q)` for `f` of degree `d`, computed as `Σ f_k p^k q^(d-k) / q^d`
/// and reduced.
pub fn compose_poly_with_ratfunc(f: &Polynomial, r: &RationalFunction) -> RationalFunction {
    let Some(d) = f.degree() else {
        return RationalFunction::zero();
    };
    let (p, q) = (&r.num, &r.den);
    if q.is_one() {
        return RationalFunction::from_poly(f.compose(p));
    }
    let num = f.homogeneous_compose(p, q, d).expect("degree is exact");
    RationalFunction::new(num, q.pow(d)).expect("q^d is nonzero")
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let g = self.den.gcd(&rhs.den);
        let ld = self.den.exact_div(&g).expect("gcd divides");
        let rd = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        RationalFunction::new(num, &ld * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction::new(&n1 * &n2, &d1 * &d2).expect("nonzero denominator")
    }
}

/// Panics on division by the zero function; use
/// [`RationalFunction::checked_div`] where that can happen.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = rf(&[-2, 2], &[-2, 0, 2]); // (2λ-2)/(2λ²-2) = 1/(λ+1)
        assert_eq!(r.num(), &p(&[1]));
        assert_eq!(r.den(), &p(&[1, 1]));
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(rf(&[0], &[3, 1]), RationalFunction::zero());
    }

    #[test]
    fn field_operations() {
        let a = rf(&[1], &[0, 1]); // 1/λ
        let b = rf(&[1], &[-1, 1]); // 1/(λ-1)
        assert_eq!(&a + &b, rf(&[-1, 2], &[0, -1, 1]));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&a * &b, rf(&[1], &[0, -1, 1]));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(RationalFunction::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn composition_examples() {
        // λ² ∘ (λ+1)/λ = (λ+1)²/λ²
        let r = rf(&[1, 1], &[0, 1]);
        assert_eq!(
            compose_poly_with_ratfunc(&p(&[0, 0, 1]), &r),
            rf(&[1, 2, 1], &[0, 0, 1])
        );
        // identity argument
        let f = p(&[-1, 0, 0, 1]);
        assert_eq!(
            compose_poly_with_ratfunc(&f, &RationalFunction::lambda()),
            RationalFunction::from_poly(f.clone())
        );
        // (λ³-1) ∘ (λ³-2λ-1)/λ² = ((λ³-2λ-1)³ - λ⁶)/λ⁶, cross-checked by
        // evaluation at 2, 3 and 5.
        let arg = rf(&[-1, -2, 0, 1], &[0, 0, 1]);
        let got = compose_poly_with_ratfunc(&f, &arg);
        let inner = p(&[-1, -2, 0, 1]);
        let expected = RationalFunction::new(
            &inner.pow(3) - &Polynomial::monomial(int(1), 6),
            Polynomial::monomial(int(1), 6),
        )
        .unwrap();
        assert_eq!(got, expected);
        for x in [2, 3, 5] {
            let x = int(x);
            let a = arg.eval(&x).unwrap();
            assert_eq!(got.eval(&x).unwrap(), f.eval(&a));
        }
    }

    #[test]
    fn affine_substitution() {
        let chi = rf(&[3], &[0, 1]); // 3/λ
        assert_eq!(
            chi.affine_substitute(&int(-1), &int(-1)).unwrap(),
            rf(&[-3], &[1, 1])
        );
        assert_eq!(chi.eval(&int(0)), None);
    }
}
