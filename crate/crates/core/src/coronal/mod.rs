//! Closed-form coronals and complement characteristic polynomials.
//!
//! Every function here takes numeric parameters and returns a reduced
//! rational function or polynomial. Where the closed form relies on an
//! algebraic cancellation, the cancellation is checked and a failure is
//! reported instead of returning a wrong answer.

mod family;
mod partition;

use num_traits::Zero;

use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::algebra::scalar::{self, Scalar};
use crate::digraph::MatrixKind;
use crate::error::{Error, Result};

pub use family::FamilySpec;
pub use partition::{coronal_equitable, EquitablePartition};

fn count(n: usize) -> Scalar {
    scalar::int(n as i64)
}

fn rf(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

/// `n/(λ - t)`: the coronal of any `n×n` matrix with all row sums `t`.
pub fn coronal_constant_rowsum(n: usize, t: &Scalar) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    rf(Polynomial::constant(count(n)), Polynomial::linear_factor(t.clone()))
}

/// `χ((λ - c)/a)`.
fn substitute_affine(chi: &RationalFunction, a: &Scalar, c: &Scalar) -> Result<RationalFunction> {
    if a.is_zero() {
        return Err(Error::Domain("coefficient a must be nonzero".into()));
    }
    let inv = a.recip();
    chi.affine_substitute(&inv, &(-c * &inv))
}

/// Coronal of `aM + bJ + cI` from the coronal `χ` of `M`.
pub fn coronal_affine(
    chi: &RationalFunction,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
) -> Result<RationalFunction> {
    let shifted = substitute_affine(chi, a, c)?;
    let den = &RationalFunction::constant(a.clone()) - &shifted.scale(b);
    shifted.checked_div(&den)
}

/// Characteristic polynomial of `aM + bJ + cI` (`M` is `n×n`) from the
/// characteristic polynomial `f` and coronal `χ` of `M`.
pub fn charpoly_affine(
    f: &Polynomial,
    chi: &RationalFunction,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    n: usize,
) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let shifted = substitute_affine(chi, a, c)?;
    let inv = a.recip();
    let f_shift = f.affine_substitute(&inv, &(-c * &inv));
    let factor = &RationalFunction::constant(a.clone()) - &shifted.scale(b);
    let value = (&RationalFunction::from_poly(f_shift) * &factor).scale(&pow(a, n - 1));
    let p = value.into_polynomial("affine characteristic polynomial")?;
    check_charpoly(p, n, "affine characteristic polynomial")
}

fn pow(a: &Scalar, e: usize) -> Scalar {
    (0..e).fold(scalar::one(), |acc, _| acc * a)
}

fn sign(n: usize) -> Scalar {
    if n.is_multiple_of(2) {
        scalar::one()
    } else {
        scalar::int(-1)
    }
}

/// A result that should be a characteristic polynomial must be monic of
/// degree `n`; anything else means the inputs were inconsistent.
fn check_charpoly(p: Polynomial, n: usize, what: &str) -> Result<Polynomial> {
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(Error::NotPolynomial(format!(
            "{what}: expected a monic polynomial of degree {n}, got {p}"
        )));
    }
    Ok(p)
}

/// `(a, c)` such that the complement's matrix is `a·M + J + c·I`.
fn complement_shift(n: usize, kind: MatrixKind) -> (Scalar, Scalar, Scalar) {
    match kind {
        // A(D̄) = -A + J - I
        MatrixKind::A => (scalar::int(-1), scalar::one(), scalar::int(-1)),
        // L(D̄) = -L - J + nI
        MatrixKind::L => (scalar::int(-1), scalar::int(-1), count(n)),
        // Q(D̄) = -Q + J + (n-2)I
        MatrixKind::Q => (scalar::int(-1), scalar::one(), count(n) - scalar::int(2)),
    }
}

/// Coronal of the complement: `1/(1 + χ(-λ-1)) - 1` for `A` and
/// `1/(1 + χ(n-λ-2)) - 1` for `Q`.
pub fn complement_coronal(
    chi: &RationalFunction,
    n: usize,
    kind: MatrixKind,
) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let c = match kind {
        MatrixKind::A => scalar::int(-1),
        MatrixKind::Q => count(n) - scalar::int(2),
        MatrixKind::L => {
            return Err(Error::Domain(
                "the complement formula covers A and Q coronals; every L coronal is n/λ".into(),
            ))
        }
    };
    let shifted = chi.affine_substitute(&scalar::int(-1), &c)?;
    let one = RationalFunction::one();
    Ok(&(&one + &shifted).recip()? - &one)
}

/// Characteristic polynomial of the complement. `chi` is the coronal of the
/// same matrix and is ignored for `L`, whose coronal is always `n/λ`.
pub fn complement_charpoly(
    f: &Polynomial,
    chi: Option<&RationalFunction>,
    n: usize,
    kind: MatrixKind,
) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let value = match kind {
        MatrixKind::L => {
            // (-1)^n λ/(λ-n) f(n-λ)
            let f_ref = f.affine_substitute(&scalar::int(-1), &count(n));
            let ratio = rf(Polynomial::lambda(), Polynomial::linear_factor(count(n)))?;
            (&ratio * &RationalFunction::from_poly(f_ref)).scale(&sign(n))
        }
        MatrixKind::A | MatrixKind::Q => {
            let chi = chi.ok_or_else(|| {
                Error::Domain(format!("{} complement needs the coronal", kind.name()))
            })?;
            let (a, _, c) = complement_shift(n, kind);
            let f_ref = f.affine_substitute(&a, &c);
            let chi_ref = chi.affine_substitute(&a, &c)?;
            let factor = &RationalFunction::one() + &chi_ref;
            (&factor * &RationalFunction::from_poly(f_ref)).scale(&sign(n))
        }
    };
    let p = value.into_polynomial("complement characteristic polynomial")?;
    check_charpoly(p, n, "complement characteristic polynomial")
}

/// Complement characteristic polynomial of an `r`-out-regular digraph,
/// using only `f`:
/// `(-1)^n (λ-n+r+1)/(λ+r+1) f(-λ-1)` for `A` and
/// `(-1)^n (λ-2n+2r+2)/(λ-n+2r+2) f(n-λ-2)` for `Q`.
pub fn complement_charpoly_outregular(
    f: &Polynomial,
    n: usize,
    r: usize,
    kind: MatrixKind,
) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let (n_s, r_s) = (count(n), count(r));
    let two = scalar::int(2);
    let (num_root, den_root) = match kind {
        MatrixKind::A => (
            &n_s - &r_s - scalar::one(),
            -(&r_s + scalar::one()),
        ),
        MatrixKind::Q => (
            &two * &n_s - &two * &r_s - &two,
            &n_s - &two * &r_s - &two,
        ),
        MatrixKind::L => return complement_charpoly(f, None, n, kind),
    };
    let (a, _, c) = complement_shift(n, kind);
    let f_ref = f.affine_substitute(&a, &c).scale(&sign(n));
    let num = &f_ref * &Polynomial::linear_factor(num_root);
    let p = num.exact_div(&Polynomial::linear_factor(den_root)).map_err(|_| {
        Error::NotPolynomial(format!(
            "out-regular complement formula left a remainder; is the digraph {r}-out-regular?"
        ))
    })?;
    check_charpoly(p, n, "out-regular complement characteristic polynomial")
}

/// `[1 - Σ n_i/(λ + n_i - r_i)]⁻¹ - 1` for `A` and
/// `[1 - Σ n_i/(λ - n + 2n_i - 2r_i)]⁻¹ - 1` for `Q`, for the join of
/// `r_i`-out-regular digraphs on `n_i` vertices.
pub fn coronal_join_outregular(
    parts: &[(usize, usize)],
    kind: MatrixKind,
) -> Result<RationalFunction> {
    if parts.is_empty() {
        return Err(Error::Domain("join needs at least one part".into()));
    }
    for &(n, r) in parts {
        if n == 0 || r >= n {
            return Err(Error::Domain(format!(
                "join part ({n}, {r}) needs n >= 1 and r < n"
            )));
        }
    }
    let total: usize = parts.iter().map(|p| p.0).sum();
    if kind == MatrixKind::L {
        return coronal_constant_rowsum(total, &scalar::zero());
    }
    let mut sum = RationalFunction::zero();
    for &(n, r) in parts {
        let (n_s, r_s) = (count(n), count(r));
        let pole = match kind {
            MatrixKind::A => &r_s - &n_s,
            _ => count(total) - scalar::int(2) * &n_s + scalar::int(2) * &r_s,
        };
        sum = &sum + &rf(Polynomial::constant(n_s), Polynomial::linear_factor(pole))?;
    }
    let one = RationalFunction::one();
    Ok(&(&one - &sum).recip()? - &one)
}

/// Semi-regular bipartite digraph with sides of sizes `n1`, `n2` and
/// out-degrees `r1` (from side 1) and `r2` (from side 2).
pub fn coronal_semiregular_bipartite(
    n1: usize,
    n2: usize,
    r1: usize,
    r2: usize,
    kind: MatrixKind,
) -> Result<RationalFunction> {
    if n1 == 0 || n2 == 0 || r1 > n2 || r2 > n1 {
        return Err(Error::Domain(format!(
            "semi-regular bipartite ({n1}, {n2}, {r1}, {r2}) needs positive sides, r1 <= n2 and r2 <= n1"
        )));
    }
    let (n1s, n2s, r1s, r2s) = (count(n1), count(n2), count(r1), count(r2));
    let lin = |c0: Scalar, c1: Scalar| Polynomial::from_coeffs(vec![c0, c1]);
    match kind {
        MatrixKind::A => rf(
            lin(&n1s * &r1s + &n2s * &r2s, &n1s + &n2s),
            Polynomial::from_coeffs(vec![-(&r1s * &r2s), scalar::zero(), scalar::one()]),
        ),
        MatrixKind::Q => rf(
            lin((&n1s - &n2s) * (&r1s - &r2s), &n1s + &n2s),
            &Polynomial::lambda() * &Polynomial::linear_factor(&r1s + &r2s),
        ),
        MatrixKind::L => coronal_constant_rowsum(n1 + n2, &scalar::zero()),
    }
}

/// Adjacency coronal of a bipartite digraph where every vertex of side 1
/// points to all of side 2 and side 2 sends `k` arcs back.
pub fn coronal_fullside_bipartite(n1: usize, n2: usize, k: usize) -> Result<RationalFunction> {
    if n1 == 0 || n2 == 0 || k > n1 * n2 {
        return Err(Error::Domain(format!(
            "full-side bipartite ({n1}, {n2}, {k}) needs positive sides and k <= n1·n2"
        )));
    }
    let (n1s, n2s, ks) = (count(n1), count(n2), count(k));
    rf(
        Polynomial::from_coeffs(vec![&ks + &n1s * &n2s, &n1s + &n2s]),
        Polynomial::from_coeffs(vec![-ks, scalar::zero(), scalar::one()]),
    )
}

/// Coronal of the directed path `P_n`.
pub fn coronal_path(n: usize, kind: MatrixKind) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let ns = count(n);
    let lam = Polynomial::lambda();
    let lm1 = Polynomial::linear_factor(scalar::one());
    let lm2 = Polynomial::linear_factor(scalar::int(2));
    match kind {
        MatrixKind::A => {
            // (nλ^(n+1) - (n+1)λ^n + 1) / (λ^n (λ-1)²)
            let num = &(&Polynomial::monomial(ns.clone(), n + 1)
                - &Polynomial::monomial(&ns + scalar::one(), n))
                + &Polynomial::one();
            rf(num, &lam.pow(n) * &lm1.pow(2))
        }
        MatrixKind::Q => {
            // ((λ-1)^n (λn(λ-2) - 2(λ-1)) + 2(λ-1)) / (λ (λ-1)^n (λ-2)²)
            let two = scalar::int(2);
            let inner = &(&lam * &lm2).scale(&ns) - &lm1.scale(&two);
            let num = &(&lm1.pow(n) * &inner) + &lm1.scale(&two);
            rf(num, &(&lam * &lm1.pow(n)) * &lm2.pow(2))
        }
        MatrixKind::L => coronal_constant_rowsum(n, &scalar::zero()),
    }
}
