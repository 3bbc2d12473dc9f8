//! JSON encodings.
//!
//! Scalars are exact strings (`"3/2"`), polynomials are
//! `{"var":"lambda","coeffs":[...]}` with ascending coefficients, rational
//! functions are `{"num":<poly>,"den":<poly>}` and matrices are row arrays of
//! scalar strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::ExactMatrix;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::scalar::{self, Scalar};

const VAR: &str = "lambda";

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: Polynomial,
    den: Polynomial,
}

fn parse_scalar<E: serde::de::Error>(s: &str) -> Result<Scalar, E> {
    scalar::parse(s).ok_or_else(|| E::custom(format!("invalid exact scalar {s:?}")))
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            var: VAR.to_string(),
            coeffs: self.coeffs().iter().map(scalar::to_text).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        if repr.var != VAR {
            return Err(D::Error::custom(format!("unsupported variable {:?}", repr.var)));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_scalar(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RatRepr::deserialize(d)?;
        RationalFunction::new(repr.num, repr.den).map_err(D::Error::custom)
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows())
            .map(|i| self.row(i).iter().map(scalar::to_text).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| parse_scalar(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;

    #[test]
    fn polynomial_shape() {
        let p = Polynomial::from_coeffs(vec![ratio(3, 2), scalar::zero(), scalar::int(-1)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"var":"lambda","coeffs":["3/2","0","-1"]}"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), p);
        assert_eq!(
            serde_json::to_string(&Polynomial::zero()).unwrap(),
            r#"{"var":"lambda","coeffs":[]}"#
        );
        assert!(serde_json::from_str::<Polynomial>(r#"{"var":"x","coeffs":[]}"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"{"var":"lambda","coeffs":["1/0"]}"#).is_err());
    }

    #[test]
    fn rational_function_round_trip() {
        let r = RationalFunction::new(Polynomial::from_i64(&[1, 2]), Polynomial::from_i64(&[0, 0, 1]))
            .unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(
            text,
            r#"{"num":{"var":"lambda","coeffs":["1","2"]},"den":{"var":"lambda","coeffs":["0","0","1"]}}"#
        );
        assert_eq!(serde_json::from_str::<RationalFunction>(&text).unwrap(), r);
    }

    #[test]
    fn matrix_round_trip() {
        let m = ExactMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"[["0","1"],["-1","0"]]"#);
        assert_eq!(serde_json::from_str::<ExactMatrix>(&text).unwrap(), m);
    }
}
