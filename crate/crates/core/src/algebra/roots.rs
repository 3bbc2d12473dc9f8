//! Floating-point root approximation.
//!
//! This is the only place floats appear. The polynomial is first split
//! exactly into square-free factors, so the Aberth iteration only ever sees
//! simple roots; multiplicities come from the decomposition and from
//! clustering nearby roots of different factors.

use num_complex::Complex64;
use serde::Serialize;

use super::poly::Polynomial;
use super::scalar;
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

impl Root {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Approximate roots of `p`, with multiplicities, sorted by real then
/// imaginary part. Roots closer than `tol` are merged.
pub fn numeric_roots(p: &Polynomial, tol: f64) -> Result<Vec<Root>> {
    if p.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut found: Vec<(Complex64, usize)> = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        // Rational roots are exact; split them off before iterating.
        let mut rest = factor.clone();
        for (r, _) in factor.rational_roots() {
            found.push((Complex64::new(scalar::to_f64(&r), 0.0), mult));
            rest = rest
                .exact_div(&Polynomial::linear_factor(r))
                .expect("rational root divides");
        }
        if !rest.is_constant() {
            let coeffs: Vec<Complex64> = rest
                .monic()
                .coeffs()
                .iter()
                .map(|c| Complex64::new(scalar::to_f64(c), 0.0))
                .collect();
            for z in aberth(&coeffs, tol)? {
                found.push((z, mult));
            }
        }
    }
    let mut clustered: Vec<(Complex64, usize)> = Vec::new();
    for (z, m) in found {
        match clustered.iter_mut().find(|(c, _)| (c - z).norm() <= tol) {
            Some(entry) => entry.1 += m,
            None => clustered.push((z, m)),
        }
    }
    let mut roots: Vec<Root> = clustered
        .into_iter()
        .map(|(z, m)| Root {
            re: clean(z.re, tol),
            im: clean(z.im, tol),
            multiplicity: m,
        })
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn clean(x: f64, tol: f64) -> f64 {
    if x.abs() <= tol {
        0.0
    } else {
        x
    }
}

/// Horner evaluation of `p` and `p'` together.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Simultaneous Aberth iteration for a monic square-free polynomial given by
/// ascending coefficients.
fn aberth(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 1 {
        return Ok(vec![-coeffs[0]]);
    }
    // Cauchy bound on the root moduli.
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let radius = bound.clamp(1e-3, 1e6) * 0.5;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let step_tol = (tol * 1e-3).max(f64::EPSILON * 4.0);
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.is_finite() {
                continue;
            }
            z[k] -= w;
            max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
        }
        if max_step <= step_tol {
            return check_residuals(coeffs, z, tol);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Backward-error check: `|p(z)|` against `tol·Σ|p_k||z|^k`.
fn check_residuals(coeffs: &[Complex64], z: Vec<Complex64>, tol: f64) -> Result<Vec<Complex64>> {
    for root in &z {
        let (p, _) = eval_with_derivative(coeffs, *root);
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm() * root.norm().powi(k as i32))
            .sum();
        if p.norm() > tol.max(1e-9) * scale {
            return Err(Error::NonConvergence {
                iterations: MAX_ITERATIONS,
            });
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn close(r: &Root, re: f64, im: f64, tol: f64) -> bool {
        (r.re - re).abs() <= tol && (r.im - im).abs() <= tol
    }

    #[test]
    fn quadratic_and_cubic() {
        let r = numeric_roots(&p(&[-1, 0, 1]), 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(&r[0], -1.0, 0.0, 1e-12) && close(&r[1], 1.0, 0.0, 1e-12));

        let r = numeric_roots(&p(&[-1, 0, 0, 1]), 1e-12).unwrap();
        assert_eq!(r.len(), 3);
        let h = 3f64.sqrt() / 2.0;
        assert!(close(&r[0], -0.5, -h, 1e-12));
        assert!(close(&r[1], -0.5, h, 1e-12));
        assert!(close(&r[2], 1.0, 0.0, 1e-12));
    }

    #[test]
    fn multiplicities() {
        // (λ-2)(λ+1)² = λ³ - 3λ - 2
        let r = numeric_roots(&p(&[-2, -3, 0, 1]), 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(&r[0], -1.0, 0.0, 1e-12) && r[0].multiplicity == 2);
        assert!(close(&r[1], 2.0, 0.0, 1e-12) && r[1].multiplicity == 1);
    }

    #[test]
    fn irrational_roots() {
        // λ⁴ - 10λ² + 1 has roots ±√2 ± √3
        let r = numeric_roots(&p(&[1, 0, -10, 0, 1]), 1e-10).unwrap();
        let expected = [
            -(2f64.sqrt() + 3f64.sqrt()),
            2f64.sqrt() - 3f64.sqrt(),
            3f64.sqrt() - 2f64.sqrt(),
            2f64.sqrt() + 3f64.sqrt(),
        ];
        for (root, e) in r.iter().zip(expected) {
            assert!(close(root, e, 0.0, 1e-10), "{root:?} vs {e}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(numeric_roots(&Polynomial::zero(), 1e-12).is_err());
        assert!(numeric_roots(&p(&[1, 1]), 0.0).is_err());
        assert!(numeric_roots(&p(&[5]), 1e-12).unwrap().is_empty());
    }
}
