//! Assembly of the closed Radon curve from a generator arc, and the
//! attainment check for the support maximum.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::gauge::GaugeNorm;
use crate::generator::{chord_point, GeneratorArc};
use crate::geom::{det2, Vec2};
use crate::poly::{point_in_convex_ccw, CentrallySymmetricPolygon};
use crate::tolerance::Tolerance;

/// The fixed conjugate basis pair. Internal coordinates are coefficients over
/// `{v, w}`, so here `v = (1, 0)` and `w = (0, 1)` with `det2(v, w) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub v: Vec2,
    pub w: Vec2,
}

impl Frame {
    pub fn standard() -> Frame {
        Frame {
            v: Vec2::BASIS_V,
            w: Vec2::BASIS_W,
        }
    }

    pub fn orientation(&self) -> f64 {
        det2(self.v, self.w).signum()
    }
}

impl Default for Frame {
    fn default() -> Self {
        Frame::standard()
    }
}

/// Which quarter of the curve a vertex belongs to, up to central symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    /// The generator arc (or its reflection through the origin).
    Generator,
    /// The dual arc (or its reflection).
    Dual,
}

/// Result of maximizing `|det2(x, z(t))|` over the whole curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Attainment {
    pub kind: ArcKind,
    pub witness: Vec2,
    pub value: f64,
}

/// A closed centrally symmetric convex polygon assembled as generator arc,
/// dual arc, and their reflections, with index ranges identifying the pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct RadonCurve {
    polygon: CentrallySymmetricPolygon,
    generator_range: Range<usize>,
    dual_range: Range<usize>,
    frame: Frame,
}

impl RadonCurve {
    /// Builds the closed curve from a validated generator arc.
    ///
    /// The cycle runs counterclockwise: the generator arc reversed (v to w),
    /// the dual arc (w to -v), then their reflections. Shared seam vertices
    /// are deduplicated; nothing else is merged, so v, w, -v, -w always
    /// survive as vertices.
    pub fn assemble(arc: &GeneratorArc, tol: &Tolerance) -> Result<RadonCurve> {
        let gen_rev: Vec<Vec2> = arc.vertices().iter().rev().copied().collect();
        let dual = arc.dual_arc();
        let n = gen_rev.len();
        let m = dual.len();

        let mut cycle: Vec<Vec2> = Vec::with_capacity(2 * (n + m) - 4);
        cycle.extend_from_slice(&gen_rev);
        cycle.extend_from_slice(&dual.vertices()[1..]);
        for &p in &gen_rev[1..] {
            cycle.push(-p);
        }
        for &p in &dual.vertices()[1..m - 1] {
            cycle.push(-p);
        }

        let polygon = CentrallySymmetricPolygon::from_cycle(cycle, tol)
            .map_err(|e| Error::Defect(format!("assembled cycle invalid: {e}")))?;
        let curve = RadonCurve {
            polygon,
            generator_range: 0..n,
            dual_range: (n - 1)..(n + m - 1),
            frame: Frame::standard(),
        };
        curve.check_invariants(tol)?;
        Ok(curve)
    }

    fn check_invariants(&self, tol: &Tolerance) -> Result<()> {
        let verts = self.polygon.vertices();
        for (anchor, name) in [
            (Vec2::BASIS_V, "v"),
            (Vec2::BASIS_W, "w"),
            (-Vec2::BASIS_V, "-v"),
            (-Vec2::BASIS_W, "-w"),
        ] {
            if !verts.contains(&anchor) {
                return Err(Error::Defect(format!("curve does not contain {name}")));
            }
        }
        // The dual portion stays inside conv{-v, w, w - v}.
        let triangle = [Vec2::new(0.0, 1.0), Vec2::new(-1.0, 1.0), Vec2::new(-1.0, 0.0)];
        for i in self.dual_range.clone() {
            if !point_in_convex_ccw(verts[i], &triangle, tol.eps_geom) {
                return Err(Error::Defect(format!(
                    "dual vertex {i} escapes conv{{-v, w, w - v}}"
                )));
            }
        }
        Ok(())
    }

    /// Reconstructs a curve from a raw cycle and piece ranges (file reload).
    pub fn from_parts(
        vertices: Vec<Vec2>,
        generator_range: Range<usize>,
        dual_range: Range<usize>,
        frame: Frame,
        tol: &Tolerance,
    ) -> Result<RadonCurve> {
        let polygon = CentrallySymmetricPolygon::from_cycle(vertices, tol)?;
        let n = polygon.len();
        if generator_range.end > n || dual_range.end > n || generator_range.len() < 2 {
            return Err(Error::Defect("piece ranges do not fit the cycle".into()));
        }
        Ok(RadonCurve {
            polygon,
            generator_range,
            dual_range,
            frame,
        })
    }

    pub fn polygon(&self) -> &CentrallySymmetricPolygon {
        &self.polygon
    }

    pub fn into_polygon(self) -> CentrallySymmetricPolygon {
        self.polygon
    }

    /// Cycle indices of the generator arc (running v to w).
    pub fn generator_range(&self) -> Range<usize> {
        self.generator_range.clone()
    }

    /// Cycle indices of the dual arc (running w to -v).
    pub fn dual_range(&self) -> Range<usize> {
        self.dual_range.clone()
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// The norm whose unit circle is this curve.
    pub fn gauge_norm(&self) -> GaugeNorm {
        GaugeNorm::new(self.polygon.clone())
    }

    /// Maximizes `|det2(x, z(t))|` over all curve vertices and reports which
    /// arc the maximum lives on, identifying antipodal pieces.
    ///
    /// Generator wins ties: the maximum is always attained on the generator
    /// arc (possibly among other places), so a dual label flags a defect.
    pub fn support_attainment(&self, t: f64) -> Result<Attainment> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ParamOutOfRange { value: t });
        }
        let z = chord_point(t);
        let verts = self.polygon.vertices();
        let mut best = f64::NEG_INFINITY;
        for &x in verts {
            best = best.max(det2(x, z).abs());
        }
        let window = 1e-12 * best.max(1.0);
        let in_generator = |i: usize| {
            let j = self.polygon.antipode_index(i);
            self.generator_range.contains(&i) || self.generator_range.contains(&j)
        };
        let mut witness_dual = None;
        for (i, &x) in verts.iter().enumerate() {
            if det2(x, z).abs() >= best - window {
                if in_generator(i) {
                    return Ok(Attainment {
                        kind: ArcKind::Generator,
                        witness: x,
                        value: best,
                    });
                }
                witness_dual.get_or_insert(x);
            }
        }
        Ok(Attainment {
            kind: ArcKind::Dual,
            witness: witness_dual.expect("some vertex attains the maximum"),
            value: best,
        })
    }
}
