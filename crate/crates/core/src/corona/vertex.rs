//! Characteristic polynomials and spectra of symmetric vertex coronas.

use serde::Serialize;

use super::kron::shifted;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::{compose_poly_with_ratfunc, RationalFunction};
use crate::algebra::scalar::{self, Scalar};
use crate::algebra::{charpoly, Resolvent};
use crate::digraph::{Digraph, MatrixKind};
use crate::error::{Error, Result};

fn usize_scalar(v: usize) -> Scalar {
    scalar::int(v as i64)
}

/// The characteristic polynomial of the symmetric vertex corona of `D1` and
/// `D2`, from the spectra and coronals of the factors.
pub fn vertex_corona_charpoly(d1: &Digraph, d2: &Digraph, kind: MatrixKind) -> Result<Polynomial> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let (n1, n2) = (d1.n(), d2.n());
    let f1 = charpoly(&d1.matrix(kind))?;
    let res = Resolvent::new(&d2.matrix(kind))?;
    let (f2, chi2) = (res.charpoly(), res.coronal()?);
    let lam = RationalFunction::lambda();
    let value = match kind {
        MatrixKind::A => {
            let arg = &lam - &chi2;
            &RationalFunction::from_poly(f2.pow(n1)) * &compose_poly_with_ratfunc(&f1, &arg)
        }
        MatrixKind::L => {
            // λ - n2 - n2/(λ-1) = (λ² - (n2+1)λ)/(λ-1)
            let num = Polynomial::from_coeffs(vec![
                scalar::zero(),
                -usize_scalar(n2 + 1),
                scalar::one(),
            ]);
            let arg = RationalFunction::new(num, Polynomial::from_i64(&[-1, 1]))?;
            let outer = shifted(f2, 1).pow(n1);
            &RationalFunction::from_poly(outer) * &compose_poly_with_ratfunc(&f1, &arg)
        }
        MatrixKind::Q => {
            let chi = chi2.affine_substitute(&scalar::one(), &scalar::int(-1))?;
            let arg = &(&lam - &RationalFunction::constant(usize_scalar(n2))) - &chi;
            let outer = shifted(f2, 1).pow(n1);
            &RationalFunction::from_poly(outer) * &compose_poly_with_ratfunc(&f1, &arg)
        }
    };
    super::clear(value, n1 + n1 * n2, "vertex corona characteristic polynomial")
}

/// `λ² - sλ + c - μ(λ - t)`: the quadratic whose roots are the two
/// eigenvalues of the corona paired with eigenvalue `μ` of `D1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticRule {
    #[serde(with = "scalar_text")]
    pub sum_shift: Scalar,
    #[serde(with = "scalar_text")]
    pub mu_root: Scalar,
    #[serde(with = "scalar_text")]
    pub constant: Scalar,
}

impl QuadraticRule {
    pub fn quadratic(&self, mu: &Scalar) -> Polynomial {
        Polynomial::from_coeffs(vec![
            &self.constant + mu * &self.mu_root,
            -(&self.sum_shift + mu),
            scalar::one(),
        ])
    }

    /// `Π_μ quadratic(μ)` over the roots `μ` of a monic `g`, which is
    /// `(λ - t)^deg g · g((λ² - sλ + c)/(λ - t))`.
    pub fn product_over_roots(&self, g: &Polynomial) -> Result<Polynomial> {
        let d = g.degree().ok_or_else(|| Error::Domain("zero polynomial".into()))?;
        let num = Polynomial::from_coeffs(vec![self.constant.clone(), -self.sum_shift.clone(), scalar::one()]);
        let den = Polynomial::linear_factor(self.mu_root.clone());
        let arg = RationalFunction::new(num, den.clone())?;
        let value = &RationalFunction::from_poly(den.pow(d)) * &compose_poly_with_ratfunc(g, &arg);
        value.into_polynomial("product of paired quadratics")
    }
}

/// A rational eigenvalue `μ` of `D1`'s matrix with its quadratic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairedEigenvalues {
    #[serde(with = "scalar_text")]
    pub mu: Scalar,
    pub multiplicity: usize,
    pub quadratic: Polynomial,
}

/// The eigenvalues of `D1` without a rational form, given by the monic
/// factor `mu_poly` of its characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametricPairs {
    pub mu_poly: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumDescription {
    pub kind: MatrixKind,
    /// Eigenvalues of `D2` (one copy of the out-degree removed), each
    /// repeated `n1` times.
    pub inherited: Polynomial,
    pub inherited_multiplicity: usize,
    pub rule: QuadraticRule,
    pub paired: Vec<PairedEigenvalues>,
    pub parametric: Option<ParametricPairs>,
}

impl SpectrumDescription {
    /// Multiplies the description back into a characteristic polynomial.
    pub fn expand(&self) -> Result<Polynomial> {
        let mut out = self.inherited.pow(self.inherited_multiplicity);
        for p in &self.paired {
            out = &out * &p.quadratic.pow(p.multiplicity);
        }
        if let Some(par) = &self.parametric {
            out = &out * &self.rule.product_over_roots(&par.mu_poly)?;
        }
        Ok(out)
    }
}

/// The spectrum of the symmetric vertex corona when `D2` is out-regular and
/// strongly connected: eigenvalues inherited from `D2` plus two eigenvalues
/// per eigenvalue of `D1`.
pub fn vertex_corona_spectrum_outregular(
    d1: &Digraph,
    d2: &Digraph,
    kind: MatrixKind,
) -> Result<SpectrumDescription> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let r = d2
        .out_regular()
        .ok_or_else(|| Error::Hypothesis("D2 is not out-regular".into()))?;
    if !d2.is_strongly_connected()? {
        return Err(Error::Hypothesis("D2 is not strongly connected".into()));
    }
    let (n1, n2) = (d1.n(), d2.n());
    let f2 = charpoly(&d2.matrix(kind))?;
    let (rule, inherited) = match kind {
        MatrixKind::A => (
            QuadraticRule {
                sum_shift: usize_scalar(r),
                mu_root: usize_scalar(r),
                constant: -usize_scalar(n2),
            },
            remove_root(&f2, r as i64)?,
        ),
        MatrixKind::L => (
            QuadraticRule {
                sum_shift: usize_scalar(n2 + 1),
                mu_root: scalar::one(),
                constant: scalar::zero(),
            },
            remove_root(&shifted(&f2, 1), 1)?,
        ),
        MatrixKind::Q => (
            QuadraticRule {
                sum_shift: usize_scalar(n2 + 2 * r + 1),
                mu_root: usize_scalar(2 * r + 1),
                constant: usize_scalar(2 * r * n2),
            },
            remove_root(&shifted(&f2, 1), 2 * r as i64 + 1)?,
        ),
    };
    let f1 = charpoly(&d1.matrix(kind))?;
    let mut rest = f1.clone();
    let mut paired = Vec::new();
    for (mu, multiplicity) in f1.rational_roots() {
        rest = rest.exact_div(&Polynomial::linear_factor(mu.clone()).pow(multiplicity))?;
        paired.push(PairedEigenvalues {
            quadratic: rule.quadratic(&mu),
            mu,
            multiplicity,
        });
    }
    let parametric = (!rest.is_constant()).then_some(ParametricPairs { mu_poly: rest });
    Ok(SpectrumDescription {
        kind,
        inherited,
        inherited_multiplicity: n1,
        rule,
        paired,
        parametric,
    })
}

fn remove_root(f: &Polynomial, root: i64) -> Result<Polynomial> {
    f.exact_div(&Polynomial::linear_factor(scalar::int(root)))
        .map_err(|_| Error::Hypothesis(format!("{root} is not an eigenvalue of D2")))
}

mod scalar_text {
    use super::{scalar, Scalar};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(s: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&scalar::to_text(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::{vertex_corona, Direction};

    fn direct(d1: &Digraph, d2: &Digraph, kind: MatrixKind) -> Polynomial {
        charpoly(&vertex_corona(d1, d2, Direction::Symmetric).unwrap().matrix(kind)).unwrap()
    }

    #[test]
    fn theorem_matches_direct() {
        let cases = [
            (Digraph::cycle(3), Digraph::path(2)),
            (Digraph::path(3), Digraph::cycle(2)),
            (Digraph::complete(2), Digraph::empty(2)),
            (Digraph::new(3, [(0, 1), (0, 2), (2, 1)]).unwrap(), Digraph::cycle(3)),
        ];
        for (d1, d2) in &cases {
            for kind in MatrixKind::ALL {
                assert_eq!(vertex_corona_charpoly(d1, d2, kind).unwrap(), direct(d1, d2, kind), "{d1} {d2} {kind:?}");
            }
        }
    }

    #[test]
    fn spectrum_expands_to_charpoly() {
        // C_5 has irrational adjacency eigenvalues, P_3's are all zero
        for d1 in [Digraph::cycle(5), Digraph::path(3), Digraph::complete(3)] {
            for kind in MatrixKind::ALL {
                let s = vertex_corona_spectrum_outregular(&d1, &Digraph::cycle(3), kind).unwrap();
                assert_eq!(s.expand().unwrap(), direct(&d1, &Digraph::cycle(3), kind), "{d1} {kind:?}");
            }
        }
        let s = vertex_corona_spectrum_outregular(&Digraph::cycle(5), &Digraph::cycle(3), MatrixKind::A).unwrap();
        assert_eq!(s.paired.len(), 1);
        assert_eq!(s.parametric.unwrap().mu_poly.degree(), Some(4));
    }

    #[test]
    fn spectrum_hypotheses() {
        let c3 = Digraph::cycle(3);
        assert!(matches!(
            vertex_corona_spectrum_outregular(&c3, &Digraph::path(3), MatrixKind::A),
            Err(Error::Hypothesis(_))
        ));
        // out-regular but not strongly connected
        let two_cycles = Digraph::cycle(2).disjoint_union(&Digraph::cycle(2));
        assert!(matches!(
            vertex_corona_spectrum_outregular(&c3, &two_cycles, MatrixKind::L),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn quadratic_rule_product() {
        let rule = QuadraticRule { sum_shift: scalar::int(2), mu_root: scalar::int(2), constant: scalar::int(-3) };
        let g = Polynomial::from_i64(&[-2, 0, 1]);
        let expected = &rule.quadratic(&scalar::int(1)) * &rule.quadratic(&scalar::int(-1));
        // the product is symmetric in the roots, so an integer-root check
        // on λ² - 1 pins down the sign conventions
        assert_eq!(rule.product_over_roots(&Polynomial::from_i64(&[-1, 0, 1])).unwrap(), expected);
        assert_eq!(rule.product_over_roots(&g).unwrap().degree(), Some(4));
    }
}
