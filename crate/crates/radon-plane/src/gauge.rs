//! Gauge norms from centrally symmetric polygons and the dual antinorm.

use crate::error::{Error, Result};
use crate::geom::{det2, Vec2};
use crate::poly::CentrallySymmetricPolygon;
use crate::tolerance::Tolerance;

/// A norm defined by a centrally symmetric convex polygon as unit ball.
///
/// `form_scale` rescales the determinant form used by the antinorm side
/// (the norm itself never sees it). The default scale is one.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeNorm {
    body: CentrallySymmetricPolygon,
    form_scale: f64,
}

impl GaugeNorm {
    pub fn new(body: CentrallySymmetricPolygon) -> GaugeNorm {
        GaugeNorm {
            body,
            form_scale: 1.0,
        }
    }

    /// Same norm, with the determinant form rescaled to `scale * det2`.
    pub fn with_form_scale(body: CentrallySymmetricPolygon, scale: f64) -> Result<GaugeNorm> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::InvalidTolerance);
        }
        Ok(GaugeNorm {
            body,
            form_scale: scale,
        })
    }

    pub fn body(&self) -> &CentrallySymmetricPolygon {
        &self.body
    }

    pub fn form_scale(&self) -> f64 {
        self.form_scale
    }

    /// The gauge functional of the unit ball: zero at the origin, otherwise
    /// the unique `t > 0` with `x / t` on the unit circle.
    pub fn norm(&self, x: Vec2) -> f64 {
        self.body.gauge(x)
    }

    /// The antinorm: the supremum of `|form(y, x)|` over the unit circle,
    /// attained at a vertex (a linear functional over a convex set is
    /// extremal at an extreme point).
    pub fn antinorm(&self, x: Vec2) -> f64 {
        let mut best = 0.0f64;
        for &y in self.body.vertices() {
            let val = det2(y, x).abs();
            if val > best {
                best = val;
            }
        }
        self.form_scale * best
    }

    /// Boundary point in direction `dir`, i.e. `dir / norm(dir)`.
    pub fn unit_vector(&self, dir: Vec2) -> Result<Vec2> {
        self.body.ray_boundary_point(dir)
    }

    /// The unit circle of the antinorm, as an exact polygon.
    ///
    /// Each body vertex `y` contributes the slab `|form(y, x)| <= 1`; the
    /// boundary of the slab intersection has one vertex per body edge:
    /// for the edge `(p, q)` the constraints `det2(p, x) = det2(q, x) = 1`
    /// meet at `(q - p) / det2(p, q)`, scaled by the form.
    pub fn anticircle(&self, tol: &Tolerance) -> Result<CentrallySymmetricPolygon> {
        let n = self.body.len();
        let mut dual = Vec::with_capacity(n);
        for i in 0..n {
            let (p, q) = self.body.edge(i);
            let d = det2(p, q) * self.form_scale;
            dual.push((q - p) * (1.0 / d));
        }
        CentrallySymmetricPolygon::new(dual, tol)
    }

    /// The antinorm packaged with its exact unit circle, giving a second,
    /// independent evaluation route (gauge of the anticircle).
    pub fn antinorm_view(&self, tol: &Tolerance) -> Result<AntinormView> {
        Ok(AntinormView {
            base: self.clone(),
            anticircle: self.anticircle(tol)?,
        })
    }
}

/// A gauge norm together with its anticircle.
#[derive(Debug, Clone, PartialEq)]
pub struct AntinormView {
    base: GaugeNorm,
    anticircle: CentrallySymmetricPolygon,
}

impl AntinormView {
    pub fn base(&self) -> &GaugeNorm {
        &self.base
    }

    pub fn anticircle(&self) -> &CentrallySymmetricPolygon {
        &self.anticircle
    }

    /// Antinorm evaluated as the gauge of the anticircle.
    pub fn antinorm(&self, x: Vec2) -> f64 {
        self.anticircle.gauge(x)
    }
}
