//! JSON encoding of the polynomial types (schema `tsallis-bernoulli/1`).
//!
//! * λ-polynomial: array of canonical rational strings, ascending power,
//!   trailing zeros stripped (`[]` is the zero polynomial);
//! * x-polynomial: `{"var": "x", "coeffs": [<λ-poly>, …]}`;
//! * xy-polynomial: `[{"xexp": j, "yexp": l, "coeff": <λ-poly>}, …]`
//!   sorted by `(xexp, yexp)` with no zero coefficients.
//!
//! Decoding is the exact inverse: `decode(encode(p)) == p`.

use crate::poly::{LambdaPoly, XPoly};
use crate::rational::{parse_rational, ParseRationalError};
use crate::xypoly::XYPoly;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum JsonDecodeError {
    #[error("expected {expected}, found {found}")]
    Shape {
        expected: &'static str,
        found: String,
    },
    #[error("bad rational: {0}")]
    Rational(#[from] ParseRationalError),
    #[error("duplicate monomial ({0},{1})")]
    DuplicateMonomial(usize, usize),
}

fn shape(expected: &'static str, v: &Value) -> JsonDecodeError {
    let found = match v {
        Value::Null => "null".to_string(),
        Value::Bool(_) => "bool".to_string(),
        Value::Number(_) => "number".to_string(),
        Value::String(s) => format!("string `{s}`"),
        Value::Array(_) => "array".to_string(),
        Value::Object(_) => "object".to_string(),
    };
    JsonDecodeError::Shape { expected, found }
}

pub fn lambda_poly_to_json(p: &LambdaPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn lambda_poly_from_json(v: &Value) -> Result<LambdaPoly, JsonDecodeError> {
    let arr = v.as_array().ok_or_else(|| shape("array of rationals", v))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for item in arr {
        let s = item.as_str().ok_or_else(|| shape("rational string", item))?;
        coeffs.push(parse_rational(s)?);
    }
    Ok(LambdaPoly::from_coeffs(coeffs))
}

pub fn xpoly_to_json(p: &XPoly) -> Value {
    json!({
        "var": "x",
        "coeffs": p.coeffs().iter().map(lambda_poly_to_json).collect::<Vec<_>>(),
    })
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly, JsonDecodeError> {
    let obj = v
        .as_object()
        .ok_or_else(|| shape("object with var and coeffs", v))?;
    match obj.get("var").and_then(Value::as_str) {
        Some("x") => {}
        _ => return Err(shape("var == \"x\"", v)),
    }
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("coeffs array", v))?;
    let parsed = coeffs
        .iter()
        .map(lambda_poly_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(XPoly::from_coeffs(parsed))
}

pub fn xypoly_to_json(p: &XYPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(&(xexp, yexp), c)| {
                json!({
                    "xexp": xexp,
                    "yexp": yexp,
                    "coeff": lambda_poly_to_json(c),
                })
            })
            .collect(),
    )
}

pub fn xypoly_from_json(v: &Value) -> Result<XYPoly, JsonDecodeError> {
    let arr = v.as_array().ok_or_else(|| shape("array of monomials", v))?;
    let mut out = XYPoly::zero();
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| shape("monomial object", item))?;
        let xexp = obj
            .get("xexp")
            .and_then(Value::as_u64)
            .ok_or_else(|| shape("xexp integer", item))? as usize;
        let yexp = obj
            .get("yexp")
            .and_then(Value::as_u64)
            .ok_or_else(|| shape("yexp integer", item))? as usize;
        let coeff = lambda_poly_from_json(
            obj.get("coeff")
                .ok_or_else(|| shape("coeff array", item))?,
        )?;
        if !out.coeff(xexp, yexp).is_zero() {
            return Err(JsonDecodeError::DuplicateMonomial(xexp, yexp));
        }
        out = out.add(&XYPoly::monomial(coeff, xexp, yexp));
    }
    Ok(out)
}
