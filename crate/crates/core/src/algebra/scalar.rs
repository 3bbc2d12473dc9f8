//! Exact rational scalars.
//!
//! Every matrix, polynomial and rational function in this crate lives over
//! [`Scalar`], an arbitrary-precision rational kept in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text form: `"3/2"`, `"-1"`, `"0"`.
pub fn to_text(s: &Scalar) -> String {
    s.to_string()
}

/// Parse `"a"` or `"a/b"` (optional sign on the numerator, `b != 0`).
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or_else(|| {
        if s.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Integer value of `s`, if it is an integer that fits in `i64`.
pub fn as_i64(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        s.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse(" 7 "), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(to_text(&ratio(6, -4)), "-3/2");
        assert_eq!(to_text(&int(0)), "0");
    }
}
