//! Dense univariate polynomials in λ over exact rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the zero polynomial has no coefficients and every other
//! polynomial has a nonzero leading coefficient, so derived `PartialEq` is
//! mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self {
            coeffs: vec![scalar::zero(), scalar::one()],
        }
    }

    /// `c·λ^deg`.
    pub fn monomial(c: Scalar, deg: usize) -> Self {
        let mut coeffs = vec![scalar::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }.normalize()
    }

    /// `λ - root`.
    pub fn linear_factor(root: Scalar) -> Self {
        Self {
            coeffs: vec![-root, scalar::one()],
        }
    }

    /// Ascending coefficients; trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Self { coeffs }.normalize()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(s_deg) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if s_deg < d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![scalar::zero(); s_deg - d_deg + 1];
        for k in (0..=s_deg - d_deg).rev() {
            let c = &rem[k + d_deg] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotPolynomial(format!(
                "({self}) is not divisible by ({divisor})"
            )))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(scalar::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner(λ))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `Σ_k f_k·x^k·y^(degree-k)`, the degree-`degree` homogenisation of
    /// `self` evaluated at `(x, y)`; `self(x/y)·y^degree` without division.
    pub fn homogeneous_compose(&self, x: &Self, y: &Self, degree: usize) -> Result<Self> {
        let d = self.degree().unwrap_or(0);
        if d > degree {
            return Err(Error::Domain(format!(
                "cannot homogenise a degree-{d} polynomial to degree {degree}"
            )));
        }
        let mut y_pows = Vec::with_capacity(degree + 1);
        let mut y_pow = Self::one();
        for _ in 0..=degree {
            y_pows.push(y_pow.clone());
            y_pow = &y_pow * y;
        }
        // Horner: acc_k = acc_{k+1}·x + f_k·y^(degree-k), then the remaining
        // y^(degree-d) for the missing top coefficients
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            acc = &(&acc * x) + &y_pows[d - k].scale(c);
        }
        Ok(&acc * &y_pows[degree - d])
    }

    /// `self(λ + c)`.
    pub fn shift(&self, c: &Scalar) -> Self {
        self.compose(&Self::from_coeffs(vec![c.clone(), scalar::one()]))
    }

    /// `self(a·λ + b)`.
    pub fn affine_substitute(&self, a: &Scalar, b: &Scalar) -> Self {
        self.compose(&Self::from_coeffs(vec![b.clone(), a.clone()]))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * scalar::int(i as i64))
                .collect(),
        )
    }

    /// Yun's square-free decomposition of the monic part: pairs `(g, k)` with
    /// each `g` square-free, pairwise coprime, and `Π g^k = self.monic()`.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides f");
        let mut c = df.exact_div(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), k));
            }
            b = b.exact_div(&a).expect("a divides b");
            c = d.exact_div(&a).expect("a divides d");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Rational roots with multiplicity, by the rational root test on the
    /// integer-cleared polynomial. Roots are returned in increasing order.
    /// Candidate enumeration trial-divides the constant and leading
    /// coefficients, so coefficients beyond `u64` range are not searched.
    pub fn rational_roots(&self) -> Vec<(Scalar, usize)> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut rest = self.monic();
        // Factor out λ first so the constant term is nonzero.
        let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((scalar::zero(), zero_mult));
            rest = Self::from_coeffs(rest.coeffs[zero_mult..].to_vec());
        }
        if rest.is_constant() {
            return roots;
        }
        let ints = rest.integer_coeffs();
        let (Some(c0), Some(cn)) = (small_abs(&ints[0]), small_abs(ints.last().unwrap())) else {
            return roots;
        };
        let mut found = Vec::new();
        for p in divisors(c0) {
            for q in divisors(cn) {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Scalar::new(BigInt::from(p) * sign, BigInt::from(q));
                    let mut mult = 0;
                    let factor = Self::linear_factor(cand.clone());
                    while let Ok(q) = rest.exact_div(&factor) {
                        rest = q;
                        mult += 1;
                    }
                    if mult > 0 {
                        found.push((cand, mult));
                    }
                }
            }
        }
        roots.extend(found);
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Coefficients scaled by the lcm of the denominators (primitive up to sign).
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag_text = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (i, mag.is_one()) {
                (0, _) => out.push_str(&mag_text),
                (_, true) => {}
                (_, false) => out.push_str(&mag_text),
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

fn small_abs(v: &BigInt) -> Option<u64> {
    u64::try_from(v.abs()).ok()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("λ"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, scalar::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&p(&[0, 3])), Polynomial::one());
        assert_eq!(Polynomial::zero().gcd(&p(&[4, 2])), p(&[2, 1]));
    }

    #[test]
    fn product_and_division() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        let (q, r) = p(&[0, 0, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(r, p(&[1]));
        assert_eq!(
            p(&[1, 2]).div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(p(&[1, 0, 1]).exact_div(&p(&[-1, 1])).is_err());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn eval_and_compose() {
        let f = p(&[-1, 0, 0, 1]);
        assert_eq!(f.eval(&int(2)), int(7));
        assert_eq!(f.compose(&Polynomial::lambda()), f);
        // (λ+1)^3 - 1
        assert_eq!(f.shift(&int(1)), p(&[0, 3, 3, 1]));
        assert_eq!(f.affine_substitute(&int(-1), &int(0)), p(&[-1, 0, 0, -1]));
    }

    #[test]
    fn square_free_and_rational_roots() {
        // (λ-2)(λ+1)^2 = λ^3 - 3λ - 2
        let f = p(&[-2, -3, 0, 1]);
        let sf = f.square_free_decomposition();
        assert_eq!(sf, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
        assert_eq!(f.rational_roots(), vec![(int(-1), 2), (int(2), 1)]);
        // 4λ^2 - 1 has roots ±1/2; λ^2 + 1 has none.
        assert_eq!(
            p(&[-1, 0, 4]).rational_roots(),
            vec![(ratio(-1, 2), 1), (ratio(1, 2), 1)]
        );
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
        assert_eq!(p(&[0, 0, 1, 1]).rational_roots(), vec![(int(-1), 1), (int(0), 2)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 0, 1]).to_string(), "λ^3 - 1");
        assert_eq!(p(&[0, -2, 1]).to_string(), "λ^2 - 2λ");
        assert_eq!(
            Polynomial::from_coeffs(vec![ratio(1, 2), ratio(-3, 2)]).to_string(),
            "-(3/2)λ + (1/2)"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
