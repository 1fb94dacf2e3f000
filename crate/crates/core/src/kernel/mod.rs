//! Exact projective arithmetic over arbitrary-precision rationals.
//!
//! Points and lines are homogeneous triples in the Cartesian chart
//! `(x, y, w)`: `w = 0` is a point at infinity. Both are stored in a
//! canonical integer form (gcd 1, first nonzero entry positive), so
//! projective equality is plain `==`.

mod mat3;
mod point;

pub use mat3::{compose, Mat3};
pub(crate) use point::sign;
pub use point::{
    collinear, cross_ratio, harmonic_conjugate, incident, join, meet, midpoint, sq_dist,
    CrossRatio, HLine, HPoint,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. The denominator is kept positive
/// and coprime to the numerator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("homogeneous triple is identically zero")]
    ZeroVector,
    #[error("points coincide; no unique joining line")]
    EqualPoints,
    #[error("lines coincide; no unique meeting point")]
    EqualLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("fewer than three distinct points in cross-ratio quadruple")]
    DegenerateQuadruple,
    #[error("point coincides with an endpoint of the harmonic pair")]
    CoincidentWithEndpoint,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("point at infinity where an ordinary point is required")]
    InfinitePoint,
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Scale a rational triple to coprime integers with the first nonzero
/// entry positive. Returns `None` for the zero triple.
pub(crate) fn canonical_from_rats(v: &[Rat; 3]) -> Option<[BigInt; 3]> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = [
        v[0].numer() * (&lcm / v[0].denom()),
        v[1].numer() * (&lcm / v[1].denom()),
        v[2].numer() * (&lcm / v[2].denom()),
    ];
    canonical_from_ints(ints)
}

pub(crate) fn canonical_from_ints(mut v: [BigInt; 3]) -> Option<[BigInt; 3]> {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g.is_zero() {
        return None;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut v {
        *x /= &g;
        if lead_negative {
            *x = -&*x;
        }
    }
    Some(v)
}

pub(crate) fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn det3(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    dot(a, &cross(b, c))
}

/// Render a rational as `"p/q"` or `"p"`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p/q"` or an integer. Decimal and exponent forms are rejected.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Option<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(parse_int(n)?, d))
        }
        None => Some(Rat::from_integer(parse_int(s)?)),
    }
}
