//! JSON forms of the exact types.
//!
//! - `QScalar`: `{"num":[c0,c1,...],"den":[d0,d1,...]}`, ascending in `q`, canonical.
//! - `XSPoly`: `{"terms":[{"x":i,"s":j,"coef":<QScalar>},...]}` in canonical term order.
//! - `ZPoly`: `{"coeffs":[<XSPoly>,...]}`, ascending in `z`.
//! - `XSFrac`: `{"num":<XSPoly>,"den":<XSPoly>}`, as normalised by [`XSFrac::new`].
//!
//! Integers are written as JSON numbers of arbitrary length.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::mpoly::{Mono, XSFrac, XSPoly, ZPoly};
use crate::qfield::{QPolyZ, QScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("expected {expected} at {path}")]
    Shape {
        expected: &'static str,
        path: String,
    },
    #[error("zero denominator")]
    ZeroDenominator,
}

fn shape(expected: &'static str, path: &str) -> JsonError {
    JsonError::Shape {
        expected,
        path: path.to_string(),
    }
}

fn int_array(p: &QPolyZ) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::Number(Number::from_str(&c.to_string()).expect("integer literal")))
            .collect(),
    )
}

fn parse_int_array(v: &Value, path: &str) -> Result<QPolyZ, JsonError> {
    let arr = v.as_array().ok_or_else(|| shape("integer array", path))?;
    let cs = arr
        .iter()
        .map(|c| match c {
            Value::Number(n) => {
                BigInt::from_str(&n.to_string()).map_err(|_| shape("integer", path))
            }
            _ => Err(shape("integer", path)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPolyZ::from_coeffs(cs))
}

pub fn qscalar_to_json(v: &QScalar) -> Value {
    json!({ "num": int_array(v.numer()), "den": int_array(v.denom()) })
}

pub fn qscalar_from_json(v: &Value) -> Result<QScalar, JsonError> {
    let obj = v.as_object().ok_or_else(|| shape("object", "$"))?;
    let num = parse_int_array(obj.get("num").ok_or_else(|| shape("num", "$"))?, "$.num")?;
    let den = parse_int_array(obj.get("den").ok_or_else(|| shape("den", "$"))?, "$.den")?;
    QScalar::try_new(num, den).map_err(|_| JsonError::ZeroDenominator)
}

pub fn xspoly_to_json(p: &XSPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "x": m.x, "s": m.s, "coef": qscalar_to_json(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn xspoly_from_json(v: &Value) -> Result<XSPoly, JsonError> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("terms array", "$"))?;
    let mut out = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        let path = format!("$.terms[{i}]");
        let deg = |key: &str| {
            t.get(key)
                .and_then(Value::as_u64)
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| shape("nonnegative degree", &path))
        };
        let coef = qscalar_from_json(t.get("coef").ok_or_else(|| shape("coef", &path))?)?;
        out.push((Mono::new(deg("x")?, deg("s")?), coef));
    }
    Ok(XSPoly::from_terms(out))
}

pub fn zpoly_to_json(p: &ZPoly) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(xspoly_to_json).collect::<Vec<_>>() })
}

pub fn zpoly_from_json(v: &Value) -> Result<ZPoly, JsonError> {
    let cs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("coeffs array", "$"))?;
    Ok(ZPoly::from_coeffs(
        cs.iter().map(xspoly_from_json).collect::<Result<_, _>>()?,
    ))
}

pub fn xsfrac_to_json(v: &XSFrac) -> Value {
    json!({ "num": xspoly_to_json(v.numer()), "den": xspoly_to_json(v.denom()) })
}

pub fn xsfrac_from_json(v: &Value) -> Result<XSFrac, JsonError> {
    let num = xspoly_from_json(v.get("num").ok_or_else(|| shape("num", "$"))?)?;
    let den = xspoly_from_json(v.get("den").ok_or_else(|| shape("den", "$"))?)?;
    if den.is_zero() {
        return Err(JsonError::ZeroDenominator);
    }
    Ok(XSFrac::new(num, den))
}

/// A JSON object with the given key/value pairs in insertion order.
pub fn object(pairs: impl IntoIterator<Item = (String, Value)>) -> Value {
    Value::Object(pairs.into_iter().collect::<Map<_, _>>())
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        qscalar_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        qscalar_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for XSPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        xspoly_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for XSPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        xspoly_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        zpoly_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        zpoly_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{new_qhermite, orth_poly_sequence};
    use crate::moments::jspec_new_h;
    use crate::qfield::qint;

    #[test]
    fn qscalar_schema() {
        let v = &qint(3) / &QScalar::from_poly(QPolyZ::from_i64s(&[1, -1]));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"num":[-1,-1,-1],"den":[-1,1]}"#
        );
        assert_eq!(
            serde_json::to_string(&QScalar::zero()).unwrap(),
            r#"{"num":[],"den":[1]}"#
        );
    }

    #[test]
    fn big_integers_survive() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 40) + 7;
        let v = QScalar::from_int(big.clone());
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains(&big.to_string()));
        let back: QScalar = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn non_canonical_input_is_normalised() {
        let v: QScalar = serde_json::from_str(r#"{"num":[-1,0,1],"den":[-1,1]}"#).unwrap();
        assert_eq!(v, QScalar::from_poly(QPolyZ::from_i64s(&[1, 1])));
        assert!(serde_json::from_str::<QScalar>(r#"{"num":[1],"den":[]}"#).is_err());
        assert!(serde_json::from_str::<QScalar>(r#"{"num":[1.5],"den":[1]}"#).is_err());
    }

    #[test]
    fn xspoly_round_trip() {
        for p in new_qhermite(8).entries {
            let text = serde_json::to_string(&p).unwrap();
            let back: XSPoly = serde_json::from_str(&text).unwrap();
            assert_eq!(back, p);
        }
        let h2 = &XSPoly::x().pow(2) - &XSPoly::s();
        assert_eq!(
            serde_json::to_string(&h2).unwrap(),
            r#"{"terms":[{"x":0,"s":1,"coef":{"num":[-1],"den":[1]}},{"x":2,"s":0,"coef":{"num":[1],"den":[1]}}]}"#
        );
    }

    #[test]
    fn xsfrac_round_trip() {
        let f = XSFrac::new(
            &XSPoly::x() + &XSPoly::s(),
            &XSPoly::x().pow(2) - &XSPoly::s(),
        );
        let back = xsfrac_from_json(&xsfrac_to_json(&f)).unwrap();
        assert_eq!(back, f);
        let zero_den = json!({ "num": xspoly_to_json(&XSPoly::one()), "den": {"terms": []} });
        assert_eq!(xsfrac_from_json(&zero_den), Err(JsonError::ZeroDenominator));
    }

    #[test]
    fn zpoly_round_trip() {
        for p in orth_poly_sequence(&jspec_new_h(), 4) {
            let back: ZPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            assert_eq!(back, p);
        }
    }
}
