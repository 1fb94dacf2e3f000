//! Triangle-relative constructions: barycentric coordinates, the
//! complement and isotomic maps, cevian and anticevian triangles, and the
//! admissibility predicates.
//!
//! The public functions use barycentric closed forms. [`synthetic`] holds
//! join/meet constructions of the same objects; each route is the other's
//! test oracle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::kernel::{collinear, HPoint, Mat3, Rat};

/// A reference triangle with ordinary, non-collinear vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct TriangleRef {
    vertices: [HPoint; 3],
    to_cartesian: Mat3,
    to_bary: Mat3,
}

impl TriangleRef {
    pub fn new(a: HPoint, b: HPoint, c: HPoint) -> Result<Self> {
        if !(a.is_ordinary() && b.is_ordinary() && c.is_ordinary()) || collinear(&a, &b, &c) {
            return Err(GeometryError::DegenerateTriangle);
        }
        let col = |p: &HPoint| {
            let (x, y) = p.cartesian().expect("checked ordinary");
            [x, y, Rat::one()]
        };
        let to_cartesian = Mat3::from_columns([col(&a), col(&b), col(&c)]);
        let to_bary = to_cartesian.inverse()?;
        Ok(TriangleRef { vertices: [a, b, c], to_cartesian, to_bary })
    }

    pub fn from_i64(coords: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = coords.map(|(x, y)| HPoint::xy(x.into_rat(), y.into_rat()));
        Self::new(a, b, c)
    }

    pub fn vertices(&self) -> &[HPoint; 3] {
        &self.vertices
    }

    pub fn a(&self) -> &HPoint {
        &self.vertices[0]
    }

    pub fn b(&self) -> &HPoint {
        &self.vertices[1]
    }

    pub fn c(&self) -> &HPoint {
        &self.vertices[2]
    }

    pub fn centroid(&self) -> HPoint {
        bary_to_point(self, &Bary::from_i64(1, 1, 1).expect("nonzero"))
    }

    /// Midpoints of BC, CA, AB.
    pub fn medial(&self) -> [HPoint; 3] {
        [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
            .map(|(u, v, w)| bary_to_point(self, &Bary::from_i64(u, v, w).expect("nonzero")))
    }
}

impl fmt::Debug for TriangleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "Triangle({a}, {b}, {c})")
    }
}

trait IntoRat {
    fn into_rat(self) -> Rat;
}

impl IntoRat for i64 {
    fn into_rat(self) -> Rat {
        Rat::from_integer(self.into())
    }
}

/// Homogeneous barycentric coordinates, canonical integer form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bary([BigInt; 3]);

impl Bary {
    pub fn from_rats(v: &[Rat; 3]) -> Result<Self> {
        crate::kernel::canonical_from_rats(v)
            .map(Bary)
            .ok_or(crate::kernel::KernelError::ZeroVector.into())
    }

    pub fn from_ints(v: [BigInt; 3]) -> Result<Self> {
        crate::kernel::canonical_from_ints(v)
            .map(Bary)
            .ok_or(crate::kernel::KernelError::ZeroVector.into())
    }

    pub fn from_i64(u: i64, v: i64, w: i64) -> Result<Self> {
        Self::from_ints([u.into(), v.into(), w.into()])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// True iff the coordinates sum to zero (a point at infinity).
    pub fn is_infinite(&self) -> bool {
        (&self.0[0] + &self.0[1] + &self.0[2]).is_zero()
    }
}

impl fmt::Debug for Bary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Bary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.0[0], self.0[1], self.0[2])
    }
}

pub fn bary_to_point(tri: &TriangleRef, b: &Bary) -> HPoint {
    let v = b.0.clone().map(Rat::from_integer);
    HPoint::from_rats(&tri.to_cartesian.mul_vec(&v)).expect("invertible change of frame")
}

pub fn point_to_bary(tri: &TriangleRef, p: &HPoint) -> Bary {
    Bary::from_rats(&tri.to_bary.mul_vec(&p.to_rats())).expect("invertible change of frame")
}

fn map_bary(tri: &TriangleRef, p: &HPoint, f: impl FnOnce(&[BigInt; 3]) -> [BigInt; 3]) -> Result<HPoint> {
    let b = point_to_bary(tri, p);
    Ok(bary_to_point(tri, &Bary::from_ints(f(&b.0))?))
}

fn require_off_sidelines(tri: &TriangleRef, p: &HPoint) -> Result<Bary> {
    let b = point_to_bary(tri, p);
    if b.0.iter().any(Zero::is_zero) {
        return Err(GeometryError::OnSideline);
    }
    Ok(b)
}

/// The complement map `K`: homothety about the centroid with ratio −1/2.
/// In barycentrics `(u:v:w) ↦ (v+w : w+u : u+v)`.
pub fn complement(tri: &TriangleRef, p: &HPoint) -> HPoint {
    map_bary(tri, p, |[u, v, w]| [v + w, w + u, u + v]).expect("complement is invertible")
}

/// `K⁻¹`: `(u:v:w) ↦ (v+w−u : w+u−v : u+v−w)`.
pub fn anticomplement(tri: &TriangleRef, p: &HPoint) -> HPoint {
    map_bary(tri, p, |[u, v, w]| [v + w - u, w + u - v, u + v - w])
        .expect("anticomplement is invertible")
}

/// Isotomic conjugate `ι`: `(u:v:w) ↦ (vw : wu : uv)`.
pub fn isotomic(tri: &TriangleRef, p: &HPoint) -> Result<HPoint> {
    let [u, v, w] = require_off_sidelines(tri, p)?.0;
    Ok(bary_to_point(tri, &Bary::from_ints([&v * &w, &w * &u, &u * &v])?))
}

/// Isotomcomplement `Q = K(ι(p))`: `(u(v+w) : v(w+u) : w(u+v))`.
pub fn isotomcomplement(tri: &TriangleRef, p: &HPoint) -> Result<HPoint> {
    let [u, v, w] = require_off_sidelines(tri, p)?.0;
    let q = [&u * (&v + &w), &v * (&w + &u), &w * (&u + &v)];
    Ok(bary_to_point(tri, &Bary::from_ints(q)?))
}

/// Traces `D = AP·BC`, `E = BP·CA`, `F = CP·AB`: `(0:v:w), (u:0:w), (u:v:0)`.
pub fn cevian_triangle(tri: &TriangleRef, p: &HPoint) -> Result<[HPoint; 3]> {
    let [u, v, w] = require_off_sidelines(tri, p)?.0;
    let z = BigInt::zero;
    Ok([
        [z(), v.clone(), w.clone()],
        [u.clone(), z(), w],
        [u, v, z()],
    ]
    .map(|c| bary_to_point(tri, &Bary::from_ints(c).expect("two nonzero entries"))))
}

/// `(−u:v:w), (u:−v:w), (u:v:−w)`.
pub fn anticevian_triangle(tri: &TriangleRef, p: &HPoint) -> Result<[HPoint; 3]> {
    let [u, v, w] = require_off_sidelines(tri, p)?.0;
    Ok([
        [-&u, v.clone(), w.clone()],
        [u.clone(), -&v, w.clone()],
        [u, v, -w],
    ]
    .map(|c| bary_to_point(tri, &Bary::from_ints(c).expect("nonzero entries"))))
}

/// `p` lies on a line through a vertex and the centroid.
pub fn on_median(tri: &TriangleRef, p: &HPoint) -> bool {
    let [u, v, w] = &point_to_bary(tri, p).0;
    u == v || v == w || w == u
}

/// `uv + vw + wu = 0`, i.e. `p` lies on `ι(l∞)`.
pub fn on_steiner_circumellipse(tri: &TriangleRef, p: &HPoint) -> bool {
    let [u, v, w] = &point_to_bary(tri, p).0;
    (u * v + v * w + w * u).is_zero()
}

/// Off the sidelines of the triangle and of its anticomplementary triangle.
pub fn admissible(tri: &TriangleRef, p: &HPoint) -> bool {
    let [u, v, w] = &point_to_bary(tri, p).0;
    [u.clone(), v.clone(), w.clone(), v + w, w + u, u + v]
        .iter()
        .all(|x| !x.is_zero())
}

/// `ι(d)` for a point at infinity `d`: an ordinary point of the Steiner
/// circumellipse.
pub fn steiner_point_from_direction(tri: &TriangleRef, d: &HPoint) -> Result<HPoint> {
    if !d.is_infinite() {
        return Err(GeometryError::NotInfinite);
    }
    isotomic(tri, d).map_err(|e| match e {
        GeometryError::OnSideline => GeometryError::SidelineDirection,
        e => e,
    })
}

/// Join/meet constructions, independent of the barycentric closed forms.
pub mod synthetic {
    use super::*;
    use crate::kernel::{harmonic_conjugate, join, meet};

    /// `K` as the Cartesian homothety `X ↦ (3G − X)/2`.
    pub fn complement(tri: &TriangleRef, p: &HPoint) -> HPoint {
        complement_matrix(tri).map_point(p)
    }

    pub fn complement_matrix(tri: &TriangleRef) -> Mat3 {
        let (gx, gy) = tri.centroid().cartesian().expect("centroid is ordinary");
        let half = Rat::new(1.into(), 2.into());
        let three_half = Rat::new(3.into(), 2.into());
        Mat3([
            [-half.clone(), Rat::zero(), &three_half * gx],
            [Rat::zero(), -half, three_half * gy],
            [Rat::zero(), Rat::zero(), Rat::one()],
        ])
    }

    pub fn cevian_triangle(tri: &TriangleRef, p: &HPoint) -> Result<[HPoint; 3]> {
        let [a, b, c] = tri.vertices();
        if [(b, c), (c, a), (a, b)]
            .iter()
            .any(|(x, y)| collinear(x, y, p))
        {
            return Err(GeometryError::OnSideline);
        }
        Ok([
            meet(&join(a, p)?, &join(b, c)?)?,
            meet(&join(b, p)?, &join(c, a)?)?,
            meet(&join(c, p)?, &join(a, b)?)?,
        ])
    }

    /// Vertex `A′` is the harmonic conjugate of `P` with respect to `A`
    /// and the trace `D`.
    pub fn anticevian_triangle(tri: &TriangleRef, p: &HPoint) -> Result<[HPoint; 3]> {
        let def = cevian_triangle(tri, p)?;
        let v = tri.vertices();
        Ok([
            harmonic_conjugate(&v[0], &def[0], p)?,
            harmonic_conjugate(&v[1], &def[1], p)?,
            harmonic_conjugate(&v[2], &def[2], p)?,
        ])
    }

    /// Reflect the traces `D`, `E` in the side midpoints and intersect the
    /// new cevians.
    pub fn isotomic(tri: &TriangleRef, p: &HPoint) -> Result<HPoint> {
        let [d, e, _] = cevian_triangle(tri, p)?;
        let [m_bc, m_ca, _] = tri.medial();
        let reflect = |x: &HPoint, m: &HPoint| -> HPoint {
            let (mx, my) = m.cartesian().expect("midpoint is ordinary");
            let two = Rat::from_integer(2.into());
            Mat3([
                [-Rat::one(), Rat::zero(), &two * mx],
                [Rat::zero(), -Rat::one(), two * my],
                [Rat::zero(), Rat::zero(), Rat::one()],
            ])
            .map_point(x)
        };
        let d_iso = reflect(&d, &m_bc);
        let e_iso = reflect(&e, &m_ca);
        Ok(meet(&join(tri.a(), &d_iso)?, &join(tri.b(), &e_iso)?)?)
    }

    pub fn isotomcomplement(tri: &TriangleRef, p: &HPoint) -> Result<HPoint> {
        Ok(complement(tri, &isotomic(tri, p)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    fn t1() -> TriangleRef {
        TriangleRef::from_i64([(0, 0), (4, 0), (1, 3)]).unwrap()
    }

    fn t2() -> TriangleRef {
        TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap()
    }

    fn b(u: i64, v: i64, w: i64) -> Bary {
        Bary::from_i64(u, v, w).unwrap()
    }

    fn pt(x: Rat, y: Rat) -> HPoint {
        HPoint::xy(x, y)
    }

    #[test]
    fn barycentric_conversion() {
        let tri = t2();
        assert_eq!(bary_to_point(&tri, &b(1, 1, 1)), tri.centroid());
        assert_eq!(bary_to_point(&tri, &b(6, 2, 3)), pt(rat(8, 11), rat(9, 11)));
        // (0:1:-1) is the direction B − C, projectively the same as C − B
        assert_eq!(
            bary_to_point(&tri, &b(0, 1, -1)),
            HPoint::direction(int(-4), int(3)).unwrap()
        );
        assert_eq!(point_to_bary(&tri, &pt(rat(8, 11), rat(9, 11))), b(6, 2, 3));
        assert!(point_to_bary(&tri, &HPoint::from_i64(1, 1, 0).unwrap()).is_infinite());
    }

    #[test]
    fn degenerate_triangle() {
        assert_eq!(
            TriangleRef::from_i64([(0, 0), (1, 1), (2, 2)]),
            Err(GeometryError::DegenerateTriangle)
        );
    }

    #[test]
    fn complement_examples() {
        let tri = t1();
        let g = tri.centroid();
        assert_eq!(complement(&tri, &g), g);
        assert_eq!(complement(&tri, &pt(int(1), int(1))), pt(int(2), int(1)));
        let d = HPoint::direction(int(2), int(-5)).unwrap();
        assert_eq!(complement(&tri, &d), d);
        let x = pt(rat(-7, 3), rat(5, 2));
        assert_eq!(anticomplement(&tri, &complement(&tri, &x)), x);
        assert_eq!(synthetic::complement(&tri, &x), complement(&tri, &x));
    }

    #[test]
    fn isotomic_examples() {
        let tri = t2();
        let g = tri.centroid();
        assert_eq!(isotomic(&tri, &g).unwrap(), g);
        let gergonne = bary_to_point(&tri, &b(6, 2, 3));
        let nagel = isotomic(&tri, &gergonne).unwrap();
        assert_eq!(point_to_bary(&tri, &nagel), b(1, 3, 2));
        assert_eq!(nagel, pt(int(2), int(1)));
        assert_eq!(isotomic(&tri, &nagel).unwrap(), gergonne);
        assert_eq!(synthetic::isotomic(&tri, &gergonne).unwrap(), nagel);
        assert_eq!(isotomic(&tri, &pt(int(2), int(0))), Err(GeometryError::OnSideline));
    }

    #[test]
    fn isotomcomplement_examples() {
        let tri = t2();
        let g = tri.centroid();
        assert_eq!(isotomcomplement(&tri, &g).unwrap(), g);
        let gergonne = bary_to_point(&tri, &b(6, 2, 3));
        let q = isotomcomplement(&tri, &gergonne).unwrap();
        assert_eq!(point_to_bary(&tri, &q), b(5, 3, 4));
        assert_eq!(q, pt(int(1), int(1)));
        assert_eq!(synthetic::isotomcomplement(&tri, &gergonne).unwrap(), q);
    }

    #[test]
    fn orthocenter_isotomcomplement_is_symmedian() {
        // T1 has sides a² = |BC|² = 18, b² = |CA|² = 10, c² = |AB|² = 16,
        // so the symmedian point is (18 : 10 : 16) = (9 : 5 : 8).
        let tri = t1();
        let q = isotomcomplement(&tri, &pt(int(1), int(1))).unwrap();
        assert_eq!(point_to_bary(&tri, &q), b(9, 5, 8));
    }

    #[test]
    fn cevian_examples() {
        let tri = t2();
        assert_eq!(cevian_triangle(&tri, &tri.centroid()).unwrap(), tri.medial());
        let gergonne = bary_to_point(&tri, &b(6, 2, 3));
        let def = cevian_triangle(&tri, &gergonne).unwrap();
        assert_eq!(
            def,
            [pt(rat(8, 5), rat(9, 5)), pt(int(0), int(1)), pt(int(1), int(0))]
        );
        assert_eq!(synthetic::cevian_triangle(&tri, &gergonne).unwrap(), def);
        assert_eq!(
            cevian_triangle(&tri, &pt(int(2), int(0))),
            Err(GeometryError::OnSideline)
        );
    }

    #[test]
    fn anticevian_of_centroid_is_anticomplementary() {
        let tri = t1();
        let g = tri.centroid();
        let anti = anticevian_triangle(&tri, &g).unwrap();
        let expected = tri.vertices().clone().map(|v| anticomplement(&tri, &v));
        assert_eq!(anti, expected);
        assert_eq!(synthetic::anticevian_triangle(&tri, &g).unwrap(), anti);
    }

    #[test]
    fn predicates() {
        let tri = t2();
        let g = tri.centroid();
        assert!(on_median(&tri, &g));
        let gergonne = bary_to_point(&tri, &b(6, 2, 3));
        assert!(!on_median(&tri, &gergonne));
        assert!(!on_steiner_circumellipse(&tri, &gergonne));
        assert!(admissible(&tri, &gergonne));
        assert!(on_steiner_circumellipse(&tri, tri.a()));
        assert!(!admissible(&tri, tri.a()));
        // anticomplementary sideline v + w = 0
        assert!(!admissible(&tri, &bary_to_point(&tri, &b(1, 2, -2))));
    }

    #[test]
    fn steiner_points() {
        let tri = t2();
        let to_inf = |u, v, w| bary_to_point(&tri, &b(u, v, w));
        let s = steiner_point_from_direction(&tri, &to_inf(1, 1, -2)).unwrap();
        assert_eq!(point_to_bary(&tri, &s), b(-2, -2, 1));
        let s = steiner_point_from_direction(&tri, &to_inf(2, 1, -3)).unwrap();
        assert_eq!(point_to_bary(&tri, &s), b(-3, -6, 2));
        assert!(on_steiner_circumellipse(&tri, &s));
        assert_eq!(
            steiner_point_from_direction(&tri, &to_inf(1, -1, 0)),
            Err(GeometryError::SidelineDirection)
        );
        assert_eq!(
            steiner_point_from_direction(&tri, &tri.centroid()),
            Err(GeometryError::NotInfinite)
        );
    }
}
