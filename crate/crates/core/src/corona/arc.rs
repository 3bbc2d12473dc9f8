//! Characteristic polynomials of arc coronas.

use serde::Serialize;

use super::build::arc_copy_count;
use super::kron::{pencil_det, shifted};
use super::Direction;
use crate::algebra::matrix::ExactMatrix;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{self, Scalar};
use crate::algebra::Resolvent;
use crate::digraph::{Digraph, DigraphMatrix, MatrixKind};
use crate::error::{Error, Result};

fn int(v: usize) -> Scalar {
    scalar::int(v as i64)
}

fn poly_rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// The general theorem: `f_{M2+sI}^m · det(λI - M1' - χ_{M2+sI}·K)`, where
/// `s` counts the arcs each copy vertex gains towards `D1`.
pub fn arc_corona_charpoly(d1: &Digraph, d2: &Digraph, dir: Direction, kind: MatrixKind) -> Result<Polynomial> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let (n1, n2) = (d1.n(), d2.n());
    let copies = arc_copy_count(d1, dir);
    let g1 = d1.underlying_graph();
    let a1 = d1.adjacency();
    let k = match dir {
        Direction::Forward => a1,
        Direction::Backward => a1.transpose(),
        Direction::Symmetric => g1.signless_laplacian(),
    };
    let s = if kind == MatrixKind::A {
        0
    } else if dir == Direction::Symmetric {
        2
    } else {
        1
    };
    let m1 = match kind {
        MatrixKind::A => d1.adjacency(),
        _ => {
            let gained = match dir {
                Direction::Forward => d1.matrix(DigraphMatrix::OutDegree),
                Direction::Backward => d1.matrix(DigraphMatrix::InDegree),
                Direction::Symmetric => g1.degree_matrix(),
            };
            d1.matrix(kind).add(&gained.scale(&int(n2)))?
        }
    };
    let m2 = d2.matrix(kind).add(&ExactMatrix::identity(n2).scale(&scalar::int(s)))?;
    let res = Resolvent::new(&m2)?;
    let det = pencil_det(&m1, &res.coronal()?, &k)?;
    let value = &poly_rf(res.charpoly().pow(copies)) * &det;
    super::clear(value, n1 + copies * n2, "arc corona characteristic polynomial")
}

/// Special classes of `D1` with a closed form in the spectrum of `D1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcCorollary {
    /// Backward, adjacency, `D1` symmetric.
    BackwardSymmetricA,
    /// Backward, adjacency, `D1` a tournament.
    BackwardTournamentA,
    /// Symmetric, adjacency, `D1` symmetric and regular.
    SymmetricRegularA,
    ForwardRegularL,
    SymmetricRegularL,
    ForwardRegularQ,
    SymmetricRegularQ,
}

impl ArcCorollary {
    pub const ALL: [ArcCorollary; 7] = [
        ArcCorollary::BackwardSymmetricA,
        ArcCorollary::BackwardTournamentA,
        ArcCorollary::SymmetricRegularA,
        ArcCorollary::ForwardRegularL,
        ArcCorollary::SymmetricRegularL,
        ArcCorollary::ForwardRegularQ,
        ArcCorollary::SymmetricRegularQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArcCorollary::BackwardSymmetricA => "backward-symmetric-a",
            ArcCorollary::BackwardTournamentA => "backward-tournament-a",
            ArcCorollary::SymmetricRegularA => "symmetric-regular-a",
            ArcCorollary::ForwardRegularL => "forward-regular-l",
            ArcCorollary::SymmetricRegularL => "symmetric-regular-l",
            ArcCorollary::ForwardRegularQ => "forward-regular-q",
            ArcCorollary::SymmetricRegularQ => "symmetric-regular-q",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            ArcCorollary::BackwardSymmetricA | ArcCorollary::BackwardTournamentA => Direction::Backward,
            ArcCorollary::ForwardRegularL | ArcCorollary::ForwardRegularQ => Direction::Forward,
            _ => Direction::Symmetric,
        }
    }

    pub fn kind(self) -> MatrixKind {
        match self {
            ArcCorollary::BackwardSymmetricA
            | ArcCorollary::BackwardTournamentA
            | ArcCorollary::SymmetricRegularA => MatrixKind::A,
            ArcCorollary::ForwardRegularL | ArcCorollary::SymmetricRegularL => MatrixKind::L,
            _ => MatrixKind::Q,
        }
    }

    /// Candidates for a direction and matrix, in the order they are tried.
    pub fn candidates(dir: Direction, kind: MatrixKind) -> Vec<ArcCorollary> {
        Self::ALL
            .into_iter()
            .filter(|c| c.direction() == dir && c.kind() == kind)
            .collect()
    }

    /// `Ok(r)` with the out-degree (0 when irrelevant) if `D1` qualifies.
    fn check(self, d1: &Digraph) -> std::result::Result<usize, String> {
        let regular = || d1.out_regular().ok_or_else(|| "D1 is not out-regular".to_string());
        let symmetric = || {
            if d1.is_symmetric() {
                Ok(())
            } else {
                Err("D1 is not symmetric".to_string())
            }
        };
        match self {
            ArcCorollary::BackwardSymmetricA => symmetric().map(|_| 0),
            ArcCorollary::BackwardTournamentA => {
                if d1.is_tournament() {
                    Ok(0)
                } else {
                    Err("D1 is not a tournament".to_string())
                }
            }
            ArcCorollary::ForwardRegularL | ArcCorollary::ForwardRegularQ => regular(),
            _ => symmetric().and_then(|_| regular()),
        }
    }
}

impl std::str::FromStr for ArcCorollary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown corollary {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ClosedForm {
    Polynomial { corollary: ArcCorollary, charpoly: Polynomial },
    /// No corollary covers this direction and matrix, or `D1` is outside
    /// every class that does.
    NoClosedForm { reason: String },
    /// A specific corollary was requested and `D1` does not satisfy it.
    HypothesisFailed { corollary: ArcCorollary, reason: String },
}

/// Picks the first corollary whose hypotheses `D1` meets.
pub fn arc_corona_charpoly_closed(
    d1: &Digraph,
    d2: &Digraph,
    dir: Direction,
    kind: MatrixKind,
) -> Result<ClosedForm> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let candidates = ArcCorollary::candidates(dir, kind);
    if candidates.is_empty() {
        return Ok(ClosedForm::NoClosedForm {
            reason: format!("no closed form for the {} arc corona of {}", dir.short_name(), kind.name()),
        });
    }
    let mut reasons = Vec::new();
    for c in candidates {
        match arc_corona_charpoly_corollary(d1, d2, c)? {
            ClosedForm::HypothesisFailed { reason, .. } => reasons.push(reason),
            found => return Ok(found),
        }
    }
    Ok(ClosedForm::NoClosedForm {
        reason: reasons.join("; "),
    })
}

/// Evaluates one corollary, reporting [`ClosedForm::HypothesisFailed`] when
/// `D1` is outside its class.
pub fn arc_corona_charpoly_corollary(d1: &Digraph, d2: &Digraph, corollary: ArcCorollary) -> Result<ClosedForm> {
    d1.require_nonempty()?;
    d2.require_nonempty()?;
    let r = match corollary.check(d1) {
        Ok(r) => r,
        Err(reason) => return Ok(ClosedForm::HypothesisFailed { corollary, reason }),
    };
    let (n1, n2) = (d1.n(), d2.n());
    let kind = corollary.kind();
    let res1 = Resolvent::new(&d1.matrix(kind))?;
    let f1 = res1.charpoly();
    let res2 = Resolvent::new(&d2.matrix(kind))?;
    let chi2 = res2.coronal()?;
    let copies = arc_copy_count(d1, corollary.direction());
    let lam = Polynomial::lambda();
    let c = |v: usize| Polynomial::constant(int(v));
    // Everything is kept as one numerator over one denominator, cleared by
    // a single exact division at the end.
    let h = |x: &Polynomial, y: &Polynomial| f1.homogeneous_compose(x, y, n1);
    // (1+χ)^n1 · f1((s/t)/(1+χ)) with χ = a/b is H(s·b, t·(a+b)) / (b·t)^n1
    let scaled = |a: &Polynomial, b: &Polynomial, s: &Polynomial, t: &Polynomial| -> Result<(Polynomial, Polynomial)> {
        Ok((h(&(s * b), &(t * &(a + b)))?, (b * t).pow(n1)))
    };
    let (a2, b2) = (chi2.num().clone(), chi2.den().clone());
    let (inner, den) = match corollary {
        ArcCorollary::BackwardSymmetricA => scaled(&a2, &b2, &lam, &Polynomial::one())?,
        ArcCorollary::BackwardTournamentA => {
            // with s = S/u, S = λb + a, u = b - a and χ1 = G/f1:
            // (F(S, u) - a·G(S, u)) / b^n1, G homogenised to degree n1 - 1
            let g = res1.adjugate_sum();
            let (big_s, u) = (&(&lam * &b2) + &a2, &b2 - &a2);
            let gh = g.homogeneous_compose(&big_s, &u, n1 - 1)?;
            (&h(&big_s, &u)? - &(&a2 * &gh), b2.pow(n1))
        }
        ArcCorollary::SymmetricRegularA => {
            let s = &(&lam * &b2) - &a2.scale(&int(r));
            scaled(&a2, &b2, &s, &b2)?
        }
        ArcCorollary::ForwardRegularL | ArcCorollary::SymmetricRegularL => {
            let s = if corollary == ArcCorollary::ForwardRegularL { 1 } else { 2 };
            // ((λ - n2 - s)/(λ - s))^n1 · f_L1((λ² - (r·n2 + s)λ)/(λ - n2 - s))
            let x = &(&lam * &lam) - &(&lam * &c(r * n2 + s));
            (h(&x, &(&lam - &c(n2 + s)))?, (&lam - &c(s)).pow(n1))
        }
        ArcCorollary::ForwardRegularQ | ArcCorollary::SymmetricRegularQ => {
            let s: i64 = if corollary == ArcCorollary::ForwardRegularQ { 1 } else { 2 };
            let chi = chi2.affine_substitute(&scalar::one(), &scalar::int(-s))?;
            let (a, b) = (chi.num(), chi.den());
            // λ - r·n2 (+ r·χ for the forward variant)
            let mut top = &(&lam - &c(r * n2)) * b;
            if corollary == ArcCorollary::ForwardRegularQ {
                top = &top + &a.scale(&int(r));
            }
            scaled(a, b, &top, b)?
        }
    };
    let outer = match kind {
        MatrixKind::A => res2.charpoly().pow(copies),
        _ => {
            let s = if corollary.direction() == Direction::Symmetric { 2 } else { 1 };
            shifted(res2.charpoly(), s).pow(copies)
        }
    };
    let value = (&outer * &inner).exact_div(&den).map_err(|_| {
        Error::NotPolynomial(format!("{}: closed form did not clear to a polynomial", corollary.name()))
    })?;
    let charpoly = super::clear(RationalFunction::from_poly(value), n1 + copies * n2, corollary.name())?;
    Ok(ClosedForm::Polynomial { corollary, charpoly })
}
