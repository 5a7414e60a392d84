//! Plane vectors over the fixed basis pair, the determinant form, and
//! quadrant classification.
//!
//! All internal coordinates are coefficients over a basis `{v, w}` normalized
//! so that `det2(v, w) = 1`; in these coordinates `v = (1, 0)` and
//! `w = (0, 1)`, and the symplectic form is exactly the 2x2 determinant.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A plane vector written as coefficients over the basis pair `{v, w}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    /// Coefficient of the basis vector `v`.
    pub a: f64,
    /// Coefficient of the basis vector `w`.
    pub b: f64,
}

// Adding positive zero normalizes -0.0 to 0.0, so canonical vertices such as
// -w serialize and compare cleanly.
#[inline]
fn v2(a: f64, b: f64) -> Vec2 {
    Vec2 {
        a: a + 0.0,
        b: b + 0.0,
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { a: 0.0, b: 0.0 };
    /// First basis vector of the fixed frame.
    pub const BASIS_V: Vec2 = Vec2 { a: 1.0, b: 0.0 };
    /// Second basis vector of the fixed frame.
    pub const BASIS_W: Vec2 = Vec2 { a: 0.0, b: 1.0 };

    /// Builds a vector, panicking on non-finite coordinates.
    #[inline]
    pub fn new(a: f64, b: f64) -> Vec2 {
        assert!(a.is_finite() && b.is_finite(), "non-finite coordinate");
        v2(a, b)
    }

    /// Fallible constructor for untrusted input.
    pub fn try_new(a: f64, b: f64) -> Result<Vec2> {
        if a.is_finite() && b.is_finite() {
            Ok(v2(a, b))
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Euclidean length in internal coordinates. Used only as a normalizer
    /// for scale-free defect measures, never as the geometry's metric.
    #[inline]
    pub fn len2(self) -> f64 {
        self.a.hypot(self.b)
    }

    #[inline]
    pub fn is_zero(self, eps: f64) -> bool {
        self.a.abs() <= eps && self.b.abs() <= eps
    }

    /// Direction normalized to Euclidean length one (coordinate plumbing).
    pub fn normalized(self) -> Result<Vec2> {
        let n = self.len2();
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(v2(self.a / n, self.b / n))
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        v2(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        v2(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        v2(-self.a, -self.b)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, t: f64) -> Vec2 {
        v2(self.a * t, self.b * t)
    }
}

/// The symplectic (determinant) form: `det2(x, y) = x.a * y.b - x.b * y.a`.
///
/// Bilinear and antisymmetric; `det2(BASIS_V, BASIS_W) = 1`.
#[inline]
pub fn det2(x: Vec2, y: Vec2) -> f64 {
    x.a * y.b - x.b * y.a
}

/// Closed quadrants of the fixed frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub fn antipode(self) -> Quadrant {
        match self {
            Quadrant::Q1 => Quadrant::Q3,
            Quadrant::Q2 => Quadrant::Q4,
            Quadrant::Q3 => Quadrant::Q1,
            Quadrant::Q4 => Quadrant::Q2,
        }
    }

    fn bit(self) -> u8 {
        match self {
            Quadrant::Q1 => 1,
            Quadrant::Q2 => 2,
            Quadrant::Q3 => 4,
            Quadrant::Q4 => 8,
        }
    }
}

/// Set of quadrant labels; axis points belong to both adjacent quadrants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuadrantSet(u8);

impl QuadrantSet {
    pub fn insert(&mut self, q: Quadrant) {
        self.0 |= q.bit();
    }

    pub fn contains(self, q: Quadrant) -> bool {
        self.0 & q.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The set of antipodal labels, `Qk -> Qk+2`.
    pub fn antipode(self) -> QuadrantSet {
        let mut out = QuadrantSet::default();
        for q in [Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4] {
            if self.contains(q) {
                out.insert(q.antipode());
            }
        }
        out
    }
}

/// Labels the closed quadrant(s) containing a nonzero vector.
pub fn classify_quadrant(x: Vec2) -> Result<QuadrantSet> {
    if x.a == 0.0 && x.b == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut set = QuadrantSet::default();
    if x.a >= 0.0 && x.b >= 0.0 {
        set.insert(Quadrant::Q1);
    }
    if x.a <= 0.0 && x.b >= 0.0 {
        set.insert(Quadrant::Q2);
    }
    if x.a <= 0.0 && x.b <= 0.0 {
        set.insert(Quadrant::Q3);
    }
    if x.a >= 0.0 && x.b <= 0.0 {
        set.insert(Quadrant::Q4);
    }
    Ok(set)
}
