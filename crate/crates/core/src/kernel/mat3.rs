use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::{fmt_rat, HLine, HPoint, KernelError, Rat, Result};

/// A 3×3 rational matrix. As a transformation it acts on points by
/// `p ↦ M·p` and on lines by `l ↦ M⁻ᵀ·l`; it is defined only up to scale.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat3(pub [[Rat; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3(std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero())))
    }

    pub fn identity() -> Self {
        Self::diagonal(Rat::one(), Rat::one(), Rat::one())
    }

    pub fn diagonal(a: Rat, b: Rat, c: Rat) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(|x| Rat::from_integer(x.into()))))
    }

    /// Matrix whose columns are the given homogeneous triples.
    pub fn from_columns(cols: [[Rat; 3]; 3]) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone())))
    }

    /// `u·vᵀ`
    pub fn outer(u: &[Rat; 3], v: &[Rat; 3]) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &u[i] * &v[j])))
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Mat3(self.0.clone().map(|r| r.map(|x| x * k)))
    }

    pub fn sub(&self, other: &Mat3) -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] - &other.0[i][j])
        }))
    }

    pub fn det(&self) -> Rat {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Classical adjugate: `M·adj(M) = det(M)·I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        Mat3([
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ])
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(KernelError::SingularMatrix);
        }
        Ok(self.adjugate().scale(&(Rat::one() / d)))
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn compose(&self, other: &Mat3) -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                &self.0[i][0] * &other.0[0][j]
                    + &self.0[i][1] * &other.0[1][j]
                    + &self.0[i][2] * &other.0[2][j]
            })
        }))
    }

    pub fn mul_vec(&self, v: &[Rat; 3]) -> [Rat; 3] {
        std::array::from_fn(|i| {
            &self.0[i][0] * &v[0] + &self.0[i][1] * &v[1] + &self.0[i][2] * &v[2]
        })
    }

    /// Image of a point, assuming invertibility.
    pub(crate) fn map_point(&self, p: &HPoint) -> HPoint {
        HPoint::from_rats(&self.mul_vec(&p.to_rats()))
            .expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// Image of a line, assuming invertibility.
    pub(crate) fn map_line(&self, l: &HLine) -> HLine {
        let adj_t = self.adjugate().transpose();
        HLine::from_rats(&adj_t.mul_vec(&l.to_rats()))
            .expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    pub fn apply_map(&self, p: &HPoint) -> Result<HPoint> {
        if !self.is_invertible() {
            return Err(KernelError::SingularMatrix);
        }
        Ok(self.map_point(p))
    }

    pub fn apply_map_line(&self, l: &HLine) -> Result<HLine> {
        if !self.is_invertible() {
            return Err(KernelError::SingularMatrix);
        }
        Ok(self.map_line(l))
    }

    /// Projective equality: `self = k·other` for some nonzero `k`.
    pub fn maps_equal(&self, other: &Mat3) -> bool {
        let pivot = (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !self.0[i][j].is_zero());
        let Some((pi, pj)) = pivot else {
            return other.is_zero();
        };
        let a = &self.0[pi][pj];
        let b = &other.0[pi][pj];
        if b.is_zero() {
            return false;
        }
        (0..3).all(|i| (0..3).all(|j| &self.0[i][j] * b == &other.0[i][j] * a))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    /// True if the last row is `(0, 0, s)` with `s ≠ 0`.
    pub fn is_affine(&self) -> bool {
        self.0[2][0].is_zero() && self.0[2][1].is_zero() && !self.0[2][2].is_zero()
    }

    /// Entries as canonical integers (scaled, gcd 1, first nonzero positive).
    pub fn canonical_integers(&self) -> Vec<num_bigint::BigInt> {
        use num_integer::Integer;
        use num_traits::Signed;
        let flat: Vec<&Rat> = self.0.iter().flatten().collect();
        let lcm = flat.iter().fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut ints: Vec<_> = flat.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        for x in &mut ints {
            *x /= &g;
            if neg {
                *x = -&*x;
            }
        }
        ints
    }

    /// Inverse of [`Mat3::canonical_integers`]: nine entries, row-major.
    pub fn from_integers(v: &[num_bigint::BigInt]) -> Option<Self> {
        if v.len() != 9 {
            return None;
        }
        Some(Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| Rat::from_integer(v[3 * i + j].clone()))
        })))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        self.compose(rhs)
    }
}

/// `compose(m, n) = m ∘ n`: apply `n` first.
pub fn compose(m: &Mat3, n: &Mat3) -> Mat3 {
    m.compose(n)
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat3[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(fmt_rat).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}
