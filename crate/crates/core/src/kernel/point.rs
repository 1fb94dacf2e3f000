use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{
    canonical_from_ints, canonical_from_rats, cross, det3, dot, fmt_rat, KernelError, Rat, Result,
};

/// A point of the real projective plane in canonical integer form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint([BigInt; 3]);

/// A line `a·x + b·y + c·w = 0` in canonical integer form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLine([BigInt; 3]);

macro_rules! homogeneous_common {
    ($ty:ident) => {
        impl $ty {
            pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
                Self::from_rats(&[a, b, c])
            }

            pub fn from_rats(v: &[Rat; 3]) -> Result<Self> {
                canonical_from_rats(v).map($ty).ok_or(KernelError::ZeroVector)
            }

            pub fn from_ints(v: [BigInt; 3]) -> Result<Self> {
                canonical_from_ints(v).map($ty).ok_or(KernelError::ZeroVector)
            }

            pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
                Self::from_ints([a.into(), b.into(), c.into()])
            }

            /// Canonical integer coordinates.
            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn to_rats(&self) -> [Rat; 3] {
                self.0.clone().map(Rat::from_integer)
            }
        }
    };
}

homogeneous_common!(HPoint);
homogeneous_common!(HLine);

impl HPoint {
    /// The ordinary point `(x, y)`.
    pub fn xy(x: Rat, y: Rat) -> Self {
        Self::from_rats(&[x, y, Rat::from_integer(1.into())]).expect("w = 1 is nonzero")
    }

    /// The point at infinity in direction `(dx, dy)`.
    pub fn direction(dx: Rat, dy: Rat) -> Result<Self> {
        Self::from_rats(&[dx, dy, Rat::zero()])
    }

    pub fn is_ordinary(&self) -> bool {
        !self.0[2].is_zero()
    }

    pub fn is_infinite(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Cartesian coordinates, or `InfinitePoint`.
    pub fn cartesian(&self) -> Result<(Rat, Rat)> {
        if self.is_infinite() {
            return Err(KernelError::InfinitePoint);
        }
        let w = &self.0[2];
        Ok((
            Rat::new(self.0[0].clone(), w.clone()),
            Rat::new(self.0[1].clone(), w.clone()),
        ))
    }

    /// `(dx, dy)` of an infinite point, as canonical integers.
    pub fn infinite_direction(&self) -> Option<(BigInt, BigInt)> {
        self.is_infinite()
            .then(|| (self.0[0].clone(), self.0[1].clone()))
    }
}

impl HLine {
    pub fn at_infinity() -> Self {
        HLine([BigInt::zero(), BigInt::zero(), 1.into()])
    }

    /// The infinite point of this line (its direction).
    pub fn point_at_infinity(&self) -> HPoint {
        // l = (a, b, c) has direction (b, -a); for l∞ itself this is
        // degenerate and we return the x direction.
        let d = [self.0[1].clone(), -&self.0[0], BigInt::zero()];
        HPoint::from_ints(d).unwrap_or_else(|_| HPoint::from_i64(1, 0, 0).unwrap())
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }

    /// Two distinct points on the line.
    pub fn two_points(&self) -> (HPoint, HPoint) {
        let l = &self.0;
        let axes = [
            [BigInt::from(1), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::from(1), BigInt::zero()],
            [BigInt::zero(), BigInt::zero(), BigInt::from(1)],
        ];
        let mut pts: Vec<HPoint> = Vec::with_capacity(2);
        for e in &axes {
            if let Ok(p) = HPoint::from_ints(cross(l, e)) {
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            if pts.len() == 2 {
                break;
            }
        }
        let q = pts.pop().expect("a line meets at least two coordinate lines");
        let p = pts.pop().expect("a line meets at least two coordinate lines");
        (p, q)
    }
}

pub fn incident(p: &HPoint, l: &HLine) -> bool {
    dot(&p.0, &l.0).is_zero()
}

pub fn join(p: &HPoint, q: &HPoint) -> Result<HLine> {
    HLine::from_ints(cross(&p.0, &q.0)).map_err(|_| KernelError::EqualPoints)
}

pub fn meet(l: &HLine, m: &HLine) -> Result<HPoint> {
    HPoint::from_ints(cross(&l.0, &m.0)).map_err(|_| KernelError::EqualLines)
}

pub fn collinear(a: &HPoint, b: &HPoint, c: &HPoint) -> bool {
    det3(&a.0, &b.0, &c.0).is_zero()
}

/// Midpoint of two ordinary points.
pub fn midpoint(p: &HPoint, q: &HPoint) -> Result<HPoint> {
    let (px, py) = p.cartesian()?;
    let (qx, qy) = q.cartesian()?;
    let two = Rat::from_integer(2.into());
    Ok(HPoint::xy((px + qx) / &two, (py + qy) / two))
}

/// Squared Euclidean distance between ordinary points.
pub fn sq_dist(p: &HPoint, q: &HPoint) -> Result<Rat> {
    let (px, py) = p.cartesian()?;
    let (qx, qy) = q.cartesian()?;
    let dx = px - qx;
    let dy = py - qy;
    Ok(&dx * &dx + &dy * &dy)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Rat),
    Infinity,
}

impl CrossRatio {
    pub fn is_harmonic(&self) -> bool {
        matches!(self, CrossRatio::Finite(r) if *r == Rat::from_integer((-1).into()))
    }
}

/// Bracket `[xy]` of two points on the line `l`: `x × y = [xy]·l`.
fn bracket(x: &HPoint, y: &HPoint, l: &HLine) -> BigInt {
    let i = (0..3).find(|&i| !l.0[i].is_zero()).expect("canonical line is nonzero");
    let c = cross(&x.0, &y.0);
    // exact: every cross product of points on l is an integer multiple of
    // the primitive vector l
    &c[i] / &l.0[i]
}

fn common_line(pts: &[&HPoint]) -> Result<HLine> {
    let mut line = None;
    'outer: for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if p != q {
                line = Some(join(p, q)?);
                break 'outer;
            }
        }
    }
    let line = line.ok_or(KernelError::DegenerateQuadruple)?;
    if pts.iter().all(|p| incident(p, &line)) {
        Ok(line)
    } else {
        Err(KernelError::NotCollinear)
    }
}

/// The cross-ratio `(a, b; c, d) = [ac][bd] / ([ad][bc])`.
///
/// Returns [`CrossRatio::Infinity`] when the denominator vanishes.
pub fn cross_ratio(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> Result<CrossRatio> {
    let l = common_line(&[a, b, c, d])?;
    let mut distinct: Vec<&HPoint> = Vec::with_capacity(4);
    for p in [a, b, c, d] {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return Err(KernelError::DegenerateQuadruple);
    }
    let num = bracket(a, c, &l) * bracket(b, d, &l);
    let den = bracket(a, d, &l) * bracket(b, c, &l);
    if den.is_zero() {
        Ok(CrossRatio::Infinity)
    } else {
        Ok(CrossRatio::Finite(Rat::new(num, den)))
    }
}

/// The point `d` with `(a, b; c, d) = -1`.
pub fn harmonic_conjugate(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<HPoint> {
    if a == b {
        return Err(KernelError::EqualPoints);
    }
    let l = join(a, b)?;
    if !incident(c, &l) {
        return Err(KernelError::NotCollinear);
    }
    if c == a || c == b {
        return Err(KernelError::CoincidentWithEndpoint);
    }
    // c = [cb]·a + [ac]·b up to the factor [ab]; flip the sign of the b part
    let alpha = bracket(c, b, &l);
    let beta = bracket(a, c, &l);
    let d = [
        &alpha * &a.0[0] - &beta * &b.0[0],
        &alpha * &a.0[1] - &beta * &b.0[1],
        &alpha * &a.0[2] - &beta * &b.0[2],
    ];
    HPoint::from_ints(d)
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cartesian() {
            Ok((x, y)) => write!(f, "({}, {})", fmt_rat(&x), fmt_rat(&y)),
            Err(_) => write!(f, "[{}:{}:0]", self.0[0], self.0[1]),
        }
    }
}

impl fmt::Debug for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoint{self}")
    }
}

impl fmt::Display for HLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, var) in self.0.iter().zip(["x", "y", "w"]) {
            if k.is_zero() {
                continue;
            }
            let mag = k.magnitude();
            let sign = if k.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                out.push_str(if k.is_negative() { "-" } else { "" });
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
        }
        write!(f, "{out} = 0")
    }
}

impl fmt::Debug for HLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HLine[{} {} {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// Sign of a big integer as -1, 0 or 1.
pub(crate) fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
