//! Exact text input: rationals are `p` or `p/q`; no decimals or exponents.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;
use thiserror::Error;

use crate::conic::Conic;
use crate::kernel::{parse_rat, HPoint, Mat3, Rat};
use crate::triangle::{Bary, TriangleRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct ParseError(pub String);

fn err(msg: impl Into<String>) -> ParseError {
    ParseError(msg.into())
}

pub fn rational(s: &str) -> Result<Rat, ParseError> {
    parse_rat(s.trim()).ok_or_else(|| err(format!("not an exact rational: {s:?}")))
}

fn list<const N: usize>(s: &str, sep: char, what: &str) -> Result<[Rat; N], ParseError> {
    let parts: Vec<&str> = s.split(sep).collect();
    if parts.len() != N {
        return Err(err(format!("{what} needs {N} values separated by '{sep}': {s:?}")));
    }
    let mut out: [Rat; N] = std::array::from_fn(|_| Rat::zero());
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = rational(part)?;
    }
    Ok(out)
}

/// `"x,y"`
pub fn point(s: &str) -> Result<HPoint, ParseError> {
    let [x, y] = list::<2>(s, ',', "point")?;
    Ok(HPoint::xy(x, y))
}

/// `"u:v:w"`
pub fn bary(s: &str) -> Result<Bary, ParseError> {
    let v = list::<3>(s, ':', "barycentric point")?;
    Bary::from_rats(&v).map_err(|_| err("barycentric coordinates are all zero"))
}

/// `"x1,y1;x2,y2;x3,y3"`. Collinear vertices are reported as a parse error.
pub fn triangle(s: &str) -> Result<TriangleRef, ParseError> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 3 {
        return Err(err(format!("triangle needs three ';'-separated vertices: {s:?}")));
    }
    let a = point(parts[0])?;
    let b = point(parts[1])?;
    let c = point(parts[2])?;
    TriangleRef::new(a, b, c).map_err(|_| err("triangle vertices are collinear"))
}

fn string_at(v: &Value) -> Result<&str, ParseError> {
    v.as_str().ok_or_else(|| err(format!("expected a string, got {v}")))
}

/// A JSON point value: `["x","y"]` or `{"infinite":["dx","dy"]}`.
pub fn point_value(v: &Value) -> Result<HPoint, ParseError> {
    if let Some(arr) = v.as_array() {
        if arr.len() == 2 {
            return Ok(HPoint::xy(rational(string_at(&arr[0])?)?, rational(string_at(&arr[1])?)?));
        }
    }
    if let Some(inf) = v.get("infinite").and_then(Value::as_array) {
        if inf.len() == 2 {
            let dx = rational(string_at(&inf[0])?)?;
            let dy = rational(string_at(&inf[1])?)?;
            return HPoint::direction(dx, dy).map_err(|_| err("zero direction"));
        }
    }
    Err(err(format!("not a point value: {v}")))
}

fn integers(v: &Value, n: usize) -> Result<Vec<BigInt>, ParseError> {
    let arr = v.as_array().filter(|a| a.len() == n);
    let arr = arr.ok_or_else(|| err(format!("expected {n} integer strings, got {v}")))?;
    arr.iter()
        .map(|x| {
            let s = string_at(x)?;
            s.parse::<BigInt>().map_err(|_| err(format!("not an integer: {s:?}")))
        })
        .collect()
}

/// Six integer strings `(a, b, c, d, e, f)`.
pub fn conic_value(v: &Value) -> Result<Conic, ParseError> {
    let ints = integers(v, 6)?;
    let arr: [BigInt; 6] = ints.try_into().map_err(|_| err("six coefficients"))?;
    Conic::from_ints(arr).map_err(|_| err("all conic coefficients are zero"))
}

/// Nine integer strings, row-major.
pub fn mat3_value(v: &Value) -> Result<Mat3, ParseError> {
    let ints = integers(v, 9)?;
    Mat3::from_integers(&ints).ok_or_else(|| err("nine entries"))
}
