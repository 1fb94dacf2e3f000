//! Conics as symmetric 3×3 integer matrices up to scale.
//!
//! The six stored integers `(a, b, c, d, e, f)` describe
//! `a·x² + 2b·xy + c·y² + 2d·xw + 2e·yw + f·w² = 0`, i.e. the matrix
//!
//! ```text
//! | a b d |
//! | b c e |
//! | d e f |
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{GeometryError, Result};
use crate::kernel::{incident, join, sign, HLine, HPoint, Mat3, Rat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic([BigInt; 6]);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

impl ConicClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicClass::Ellipse => "ellipse",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
            ConicClass::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for ConicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a line meets a conic, from the sign of the discriminant of the
/// conic restricted to the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineSection {
    Secant,
    Tangent,
    Disjoint,
    /// The line is a component of a degenerate conic.
    Contained,
}

/// Result of [`second_intersection`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SecondPoint {
    Other(HPoint),
    /// The line is tangent at the given point, which is returned.
    Tangent(HPoint),
}

impl SecondPoint {
    pub fn point(&self) -> &HPoint {
        match self {
            SecondPoint::Other(p) | SecondPoint::Tangent(p) => p,
        }
    }
}

fn canonical6(mut v: [BigInt; 6]) -> Option<[BigInt; 6]> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut v {
        *x /= &g;
        if neg {
            *x = -&*x;
        }
    }
    Some(v)
}

impl Conic {
    /// From the six matrix entries `(a, b, c, d, e, f)`.
    pub fn from_entries(v: [Rat; 6]) -> Result<Self> {
        let lcm = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints = v.map(|r| r.numer() * (&lcm / r.denom()));
        canonical6(ints).map(Conic).ok_or(GeometryError::DegenerateConic)
    }

    pub fn from_i64(v: [i64; 6]) -> Result<Self> {
        canonical6(v.map(BigInt::from)).map(Conic).ok_or(GeometryError::DegenerateConic)
    }

    pub fn from_ints(v: [BigInt; 6]) -> Result<Self> {
        canonical6(v).map(Conic).ok_or(GeometryError::DegenerateConic)
    }

    /// From a symmetric matrix.
    pub fn from_matrix(m: &Mat3) -> Result<Self> {
        let e = |i: usize, j: usize| m.0[i][j].clone();
        Self::from_entries([e(0, 0), e(0, 1), e(1, 1), e(0, 2), e(1, 2), e(2, 2)])
    }

    /// Canonical `(a, b, c, d, e, f)`.
    pub fn coeffs(&self) -> &[BigInt; 6] {
        &self.0
    }

    fn rows(&self) -> [[&BigInt; 3]; 3] {
        let [a, b, c, d, e, f] = &self.0;
        [[a, b, d], [b, c, e], [d, e, f]]
    }

    pub fn matrix(&self) -> Mat3 {
        Mat3(self.rows().map(|r| r.map(|x| Rat::from_integer(x.clone()))))
    }

    fn mul_vec(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        self.rows().map(|r| r[0] * &v[0] + r[1] * &v[1] + r[2] * &v[2])
    }

    /// `pᵀ·M·q`
    pub fn bilinear(&self, p: &HPoint, q: &HPoint) -> BigInt {
        let mq = self.mul_vec(q.coords());
        let pc = p.coords();
        &pc[0] * &mq[0] + &pc[1] * &mq[1] + &pc[2] * &mq[2]
    }

    pub fn det(&self) -> BigInt {
        let [a, b, c, d, e, f] = &self.0;
        a * (c * f - e * e) - b * (b * f - e * d) + d * (b * e - c * d)
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.bilinear(p, p).is_zero()
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(GeometryError::DegenerateConic)
        } else {
            Ok(())
        }
    }

    pub fn polar(&self, p: &HPoint) -> Result<HLine> {
        self.require_nondegenerate()?;
        Ok(HLine::from_ints(self.mul_vec(p.coords()))?)
    }

    pub fn pole(&self, l: &HLine) -> Result<HPoint> {
        self.require_nondegenerate()?;
        let adj = self.matrix().adjugate();
        Ok(HPoint::from_rats(&adj.mul_vec(&l.to_rats()))?)
    }

    /// Pole of the line at infinity; infinite iff the conic is a parabola.
    pub fn center(&self) -> Result<HPoint> {
        self.pole(&HLine::at_infinity())
    }

    pub fn classify(&self) -> ConicClass {
        if self.is_degenerate() {
            return ConicClass::Degenerate;
        }
        match sign(&self.infinity_form_det()) {
            1 => ConicClass::Ellipse,
            0 => ConicClass::Parabola,
            _ => ConicClass::Hyperbola,
        }
    }

    /// The restriction to the line at infinity, `q∞(dx, dy) = a·dx² +
    /// 2b·dx·dy + c·dy²`, as `(a, b, c)`.
    pub fn infinity_form(&self) -> [BigInt; 3] {
        [self.0[0].clone(), self.0[1].clone(), self.0[2].clone()]
    }

    /// `ac − b²`
    pub fn infinity_form_det(&self) -> BigInt {
        &self.0[0] * &self.0[2] - &self.0[1] * &self.0[1]
    }

    /// `q∞` evaluated at a direction.
    pub fn eval_infinity_form(&self, dx: &Rat, dy: &Rat) -> Rat {
        let [a, b, c] = self.infinity_form().map(Rat::from_integer);
        a * dx * dx + Rat::from_integer(2.into()) * b * dx * dy + c * dy * dy
    }

    /// Image under an invertible map: `M⁻ᵀ·C·M⁻¹`.
    pub fn map(&self, m: &Mat3) -> Result<Conic> {
        if !m.is_invertible() {
            return Err(crate::kernel::KernelError::SingularMatrix.into());
        }
        let adj = m.adjugate();
        Conic::from_matrix(&adj.transpose().compose(&self.matrix()).compose(&adj))
    }

    /// Sign of the discriminant of the conic restricted to `l`.
    pub fn section(&self, l: &HLine) -> LineSection {
        let (p, q) = l.two_points();
        let pp = self.bilinear(&p, &p);
        let pq = self.bilinear(&p, &q);
        let qq = self.bilinear(&q, &q);
        if pp.is_zero() && pq.is_zero() && qq.is_zero() {
            return LineSection::Contained;
        }
        match sign(&(&pq * &pq - &pp * &qq)) {
            1 => LineSection::Secant,
            0 => LineSection::Tangent,
            _ => LineSection::Disjoint,
        }
    }

    pub fn tangent_at(&self, p: &HPoint) -> Result<HLine> {
        self.require_nondegenerate()?;
        if !self.contains(p) {
            return Err(GeometryError::NotOnConic);
        }
        self.polar(p)
    }

    pub fn is_self_polar(&self, p1: &HPoint, p2: &HPoint, p3: &HPoint) -> Result<bool> {
        self.require_nondegenerate()?;
        let check = |a: &HPoint, b: &HPoint, c: &HPoint| -> Result<bool> {
            Ok(self.polar(a)? == join(b, c)?)
        };
        Ok(check(p1, p2, p3)? && check(p2, p3, p1)? && check(p3, p1, p2)?)
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = &self.0;
        write!(f, "Conic[{a} {b} {c} {d} {e} {g}]")
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = &self.0;
        let two = BigInt::from(2);
        let terms = [
            (a.clone(), "x²"),
            (&two * b, "xy"),
            (c.clone(), "y²"),
            (&two * d, "x"),
            (&two * e, "y"),
            (g.clone(), ""),
        ];
        let mut first = true;
        for (k, mono) in terms.iter().filter(|(k, _)| !k.is_zero()) {
            let mag = k.abs();
            let coef = if mag.is_one() && !mono.is_empty() { String::new() } else { mag.to_string() };
            let sign = match (first, k.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sign}{coef}{mono}")?;
            first = false;
        }
        f.write_str(" = 0")
    }
}

/// Row of the 5×6 system for the unknowns `(a, b, c, d, e, f)`.
fn design_row(p: &HPoint) -> [Rat; 6] {
    let [x, y, w] = p.coords();
    let two = BigInt::from(2);
    [x * x, &two * x * y, y * y, &two * x * w, &two * y * w, w * w].map(Rat::from_integer)
}

/// Null space of a rows×6 rational matrix, one basis vector per free column.
pub(crate) fn null_space(mut m: Vec<[Rat; 6]>) -> Vec<[Rat; 6]> {
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..6 {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = Rat::one() / &m[r][col];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..6 {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..6)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [Rat; 6] = Default::default();
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// The unique conic through five points. A degenerate (line-pair) conic is
/// returned when the points force one; check [`Conic::is_degenerate`].
pub fn conic_through_5(points: [&HPoint; 5]) -> Result<Conic> {
    let basis = null_space(points.iter().map(|p| design_row(p)).collect());
    match <[_; 1]>::try_from(basis) {
        Ok([v]) => Conic::from_entries(v),
        Err(_) => Err(GeometryError::NoUniqueConic),
    }
}

/// Second intersection of `l` with `c`, given `p` on both.
pub fn second_intersection(c: &Conic, p: &HPoint, l: &HLine) -> Result<SecondPoint> {
    if !c.contains(p) {
        return Err(GeometryError::NotOnConic);
    }
    if !incident(p, l) {
        return Err(GeometryError::NotIncident);
    }
    let (a, b) = l.two_points();
    let q = if &a == p { b } else { a };
    // points p + t·q: t·(2·pMq + t·qMq) = 0
    let pq = c.bilinear(p, &q);
    if pq.is_zero() {
        return Ok(SecondPoint::Tangent(p.clone()));
    }
    let qq = c.bilinear(&q, &q);
    let two = BigInt::from(2);
    let pc = p.coords();
    let qc = q.coords();
    let r: [BigInt; 3] = std::array::from_fn(|i| &qq * &pc[i] - &two * &pq * &qc[i]);
    Ok(SecondPoint::Other(HPoint::from_ints(r)?))
}
