//! Affine maps from triangle correspondences, harmonic homologies, and
//! exact classification of affine maps.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::kernel::{collinear, HLine, HPoint, KernelError, Mat3, Rat};
use crate::triangle::{cevian_triangle, TriangleRef};

/// An invertible affine map, stored with last row `(0, 0, 1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineMap(Mat3);

impl AffineMap {
    pub fn new(m: Mat3) -> Result<Self> {
        if !m.is_affine() {
            return Err(GeometryError::NotAffine);
        }
        if !m.is_invertible() {
            return Err(KernelError::SingularMatrix.into());
        }
        let s = m.0[2][2].clone();
        Ok(AffineMap(m.scale(&(Rat::one() / s))))
    }

    pub fn identity() -> Self {
        AffineMap(Mat3::identity())
    }

    /// Homothety with the given ordinary center and ratio.
    pub fn homothety(center: &HPoint, ratio: Rat) -> Result<Self> {
        let (cx, cy) = center.cartesian()?;
        let k = Rat::one() - &ratio;
        AffineMap::new(Mat3([
            [ratio.clone(), Rat::zero(), &k * cx],
            [Rat::zero(), ratio, k * cy],
            [Rat::zero(), Rat::zero(), Rat::one()],
        ]))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn apply(&self, p: &HPoint) -> HPoint {
        self.0.map_point(p)
    }

    pub fn apply_line(&self, l: &HLine) -> HLine {
        self.0.map_line(l)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &AffineMap) -> AffineMap {
        AffineMap(self.0.compose(&other.0))
    }

    pub fn inverse(&self) -> AffineMap {
        AffineMap(self.0.inverse().expect("affine maps are invertible"))
    }

    pub fn linear(&self) -> [[Rat; 2]; 2] {
        let m = &self.0 .0;
        [
            [m[0][0].clone(), m[0][1].clone()],
            [m[1][0].clone(), m[1][1].clone()],
        ]
    }

    pub fn translation(&self) -> (Rat, Rat) {
        (self.0 .0[0][2].clone(), self.0 .0[1][2].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Mat3::identity()
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Affine{:?}", self.0)
    }
}

/// The unique affine map with `src[i] ↦ dst[i]`.
pub fn affine_from_triangles(src: &[HPoint; 3], dst: &[HPoint; 3]) -> Result<AffineMap> {
    let usable = |t: &[HPoint; 3]| t.iter().all(HPoint::is_ordinary) && !collinear(&t[0], &t[1], &t[2]);
    if !usable(src) || !usable(dst) {
        return Err(GeometryError::CollinearInput);
    }
    let columns = |t: &[HPoint; 3]| -> Result<Mat3> {
        let mut cols: [[Rat; 3]; 3] = Default::default();
        for (c, p) in cols.iter_mut().zip(t) {
            let (x, y) = p.cartesian()?;
            *c = [x, y, Rat::one()];
        }
        Ok(Mat3::from_columns(cols))
    };
    let s = columns(src)?;
    let d = columns(dst)?;
    AffineMap::new(d.compose(&s.inverse()?))
}

/// `T_P`: the affine map taking the reference triangle to the cevian
/// triangle of `p`.
pub fn build_t(tri: &TriangleRef, p: &HPoint) -> Result<AffineMap> {
    let def = cevian_triangle(tri, p)?;
    affine_from_triangles(tri.vertices(), &def)
}

/// The harmonic homology with the given center and axis:
/// `(aᵀc)·I − 2·c·aᵀ`.
pub fn harmonic_homology(center: &HPoint, axis: &HLine) -> Result<Mat3> {
    let c = center.to_rats();
    let a = axis.to_rats();
    let ac = &a[0] * &c[0] + &a[1] * &c[1] + &a[2] * &c[2];
    if ac.is_zero() {
        return Err(GeometryError::CenterOnAxis);
    }
    let two = Rat::from_integer(2.into());
    Ok(Mat3::identity().scale(&ac).sub(&Mat3::outer(&c, &a).scale(&two)))
}

/// `λ = T_P′ ∘ T_P⁻¹`.
pub fn lambda(t_p: &AffineMap, t_pp: &AffineMap) -> AffineMap {
    t_pp.after(&t_p.inverse())
}

/// `S′ = T_P′ T_P T_P′⁻¹ T_P⁻¹`.
pub fn commutator(t_p: &AffineMap, t_pp: &AffineMap) -> AffineMap {
    t_pp.after(t_p).after(&t_pp.inverse()).after(&t_p.inverse())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapClass {
    Identity,
    Translation { dx: Rat, dy: Rat },
    Homothety { center: HPoint, ratio: Rat },
    AffineReflection { axis: HLine, direction: HPoint },
    General,
}

impl MapClass {
    pub fn kind(&self) -> &'static str {
        match self {
            MapClass::Identity => "identity",
            MapClass::Translation { .. } => "translation",
            MapClass::Homothety { .. } => "homothety",
            MapClass::AffineReflection { .. } => "affine_reflection",
            MapClass::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedPoints {
    None,
    Point(HPoint),
    Line(HLine),
    Plane,
}

/// Ordinary fixed points: solutions of `(L − I)·x = −t`.
pub fn fixed_points(m: &AffineMap) -> FixedPoints {
    let l = m.linear();
    let (tx, ty) = m.translation();
    let a = [
        [&l[0][0] - Rat::one(), l[0][1].clone()],
        [l[1][0].clone(), &l[1][1] - Rat::one()],
    ];
    let b = [-tx, -ty];
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    if !det.is_zero() {
        let x = (&b[0] * &a[1][1] - &a[0][1] * &b[1]) / &det;
        let y = (&a[0][0] * &b[1] - &b[0] * &a[1][0]) / &det;
        return FixedPoints::Point(HPoint::xy(x, y));
    }
    let row = (0..2).find(|&i| !a[i][0].is_zero() || !a[i][1].is_zero());
    let Some(r) = row else {
        return if b.iter().all(Zero::is_zero) {
            FixedPoints::Plane
        } else {
            FixedPoints::None
        };
    };
    // rank one: consistent iff every 2×2 minor of [A | b] vanishes
    let consistent = (0..2).all(|i| {
        (0..2).all(|j| &a[r][j] * &b[i] == &a[i][j] * &b[r])
    });
    if !consistent {
        return FixedPoints::None;
    }
    let line = HLine::new(a[r][0].clone(), a[r][1].clone(), -b[r].clone())
        .expect("rank-one row is nonzero");
    FixedPoints::Line(line)
}

pub fn classify_map(m: &AffineMap) -> MapClass {
    let l = m.linear();
    let (tx, ty) = m.translation();
    let scalar = l[0][1].is_zero() && l[1][0].is_zero() && l[0][0] == l[1][1];
    if scalar {
        let k = l[0][0].clone();
        if k.is_one() {
            if tx.is_zero() && ty.is_zero() {
                return MapClass::Identity;
            }
            return MapClass::Translation { dx: tx, dy: ty };
        }
        let c = Rat::one() - &k;
        return MapClass::Homothety {
            center: HPoint::xy(tx / &c, ty / c),
            ratio: k,
        };
    }
    let square = m.after(m);
    if square.is_identity() {
        if let FixedPoints::Line(axis) = fixed_points(m) {
            // the −1 eigendirection is spanned by a nonzero column of L − I
            let cols = [
                (&l[0][0] - Rat::one(), l[1][0].clone()),
                (l[0][1].clone(), &l[1][1] - Rat::one()),
            ];
            let (dx, dy) = cols
                .into_iter()
                .find(|(x, y)| !x.is_zero() || !y.is_zero())
                .expect("L ≠ I");
            let direction = HPoint::direction(dx, dy).expect("nonzero column");
            return MapClass::AffineReflection { axis, direction };
        }
    }
    MapClass::General
}
