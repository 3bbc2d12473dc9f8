//! Dense row-major matrices over exact rings.
//!
//! [`ExactMatrix`] holds rational scalars; [`PolyMatrix`] and
//! [`FunctionMatrix`] hold polynomials and rational functions in λ. The
//! field-valued variants support elimination (determinant, inverse, solve).

use std::fmt::Debug;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        Polynomial::constant(s.clone())
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        RationalFunction::constant(s.clone())
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<Scalar>;
pub type PolyMatrix = Matrix<Polynomial>;
pub type FunctionMatrix = Matrix<RationalFunction>;

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// `J_{rows,cols}`.
    pub fn all_ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::one())
    }

    /// The column vector `1_n`.
    pub fn ones(n: usize) -> Self {
        Self::all_ones(n, 1)
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same_shape(&self, rhs: &Self, op: &str) -> Result<()> {
        if self.rows == rhs.rows && self.cols == rhs.cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "sum")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "difference")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j]·rhs`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .mul(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    /// Assemble `[[m1, m2], [m3, m4]]`.
    pub fn block(m1: &Self, m2: &Self, m3: &Self, m4: &Self) -> Result<Self> {
        if m1.rows != m2.rows || m3.rows != m4.rows || m1.cols != m3.cols || m2.cols != m4.cols {
            return Err(Error::DimensionMismatch("non-conformal blocks".into()));
        }
        let (p, q) = (m1.rows, m3.rows);
        let (c1, c2) = (m1.cols, m2.cols);
        Ok(Self::from_fn(p + q, c1 + c2, |i, j| match (i < p, j < c1) {
            (true, true) => m1.get(i, j).clone(),
            (true, false) => m2.get(i, j - c1).clone(),
            (false, true) => m3.get(i - p, j).clone(),
            (false, false) => m4.get(i - p, j - c1).clone(),
        }))
    }

    /// Contiguous sub-block `rows r0..r1`, `cols c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, a| acc.add(a))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Permute rows and columns: entry `(i, j)` of the result is
    /// `self[perm[i]][perm[j]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

impl<F: Field> Matrix<F> {
    /// Determinant by Gaussian elimination with nonzero pivoting.
    pub fn det(&self) -> Result<F> {
        let n = self.require_square()?;
        let mut a = self.data.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(F::zero());
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = det.neg();
            }
            let p = a[col * n + col].clone();
            det = det.mul(&p);
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = a[r * n + col].mul(&p_inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[col * n + j].mul(&factor);
                    a[r * n + j] = a[r * n + j].sub(&v);
                }
            }
        }
        Ok(det)
    }

    /// Solve `self · X = rhs` by Gauss–Jordan elimination.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        let n = self.require_square()?;
        if rhs.rows != n {
            return Err(Error::DimensionMismatch(format!(
                "solve with {n}x{n} system and {} right-hand rows",
                rhs.rows
            )));
        }
        let m = rhs.cols;
        let w = n + m;
        let mut a: Vec<F> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(self.row(i));
            a.extend_from_slice(rhs.row(i));
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * w + col].is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..w {
                    a.swap(pivot * w + j, col * w + j);
                }
            }
            let p_inv = a[col * w + col].inv().expect("pivot is nonzero");
            for j in col..w {
                a[col * w + j] = a[col * w + j].mul(&p_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * w + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..w {
                    let v = a[col * w + j].mul(&factor);
                    a[r * w + j] = a[r * w + j].sub(&v);
                }
            }
        }
        Ok(Matrix::from_fn(n, m, |i, j| a[i * w + n + j].clone()))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        self.solve(&Self::identity(n))
    }
}

impl ExactMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| scalar::int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// `λI - self` as a matrix over the function field.
    pub fn resolvent_base(&self) -> Result<FunctionMatrix> {
        self.require_square()?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            let mut p = Polynomial::constant(-self.get(i, j));
            if i == j {
                p = &p + &Polynomial::lambda();
            }
            RationalFunction::from_poly(p)
        }))
    }

    pub fn to_function_matrix(&self) -> FunctionMatrix {
        self.map(|s| RationalFunction::constant(s.clone()))
    }

    /// Row sums, each as a scalar.
    pub fn row_sums(&self) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(scalar::zero(), |acc, a| acc + a))
            .collect()
    }
}

impl PolyMatrix {
    /// Determinant by Bareiss fraction-free elimination; every division is
    /// exact in the polynomial ring.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Polynomial::one());
        }
        let mut a = self.data.clone();
        let mut sign = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            let Some(pivot) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Ok(Polynomial::zero());
            };
            if pivot != k {
                for j in 0..n {
                    a.swap(pivot * n + j, k * n + j);
                }
                sign = !sign;
            }
            let p = a[k * n + k].clone();
            for i in k + 1..n {
                let f = a[i * n + k].clone();
                for j in k + 1..n {
                    let t = &(&p * &a[i * n + j]) - &(&f * &a[k * n + j]);
                    a[i * n + j] = t.exact_div(&prev).expect("Bareiss division is exact");
                }
                a[i * n + k] = Polynomial::zero();
            }
            prev = p;
        }
        let d = a[n * n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// `λI - m` over the polynomial ring.
    pub fn char_matrix(m: &ExactMatrix) -> Result<Self> {
        m.require_square()?;
        Ok(Matrix::from_fn(m.rows(), m.cols(), |i, j| {
            let c = Polynomial::constant(-m.get(i, j));
            if i == j {
                &c + &Polynomial::lambda()
            } else {
                c
            }
        }))
    }
}
