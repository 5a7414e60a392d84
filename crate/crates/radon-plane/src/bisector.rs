//! Tangents from an external point, the Busemann and Glogovskii angular
//! bisectors, and the chord-parallelism criterion that characterizes Radon
//! curves.

use crate::error::{Error, Result};
use crate::gauge::GaugeNorm;
use crate::geom::{det2, Vec2};
use crate::poly::CentrallySymmetricPolygon;
use crate::tolerance::Tolerance;

/// A line given by a point and a direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub point: Vec2,
    pub dir: Vec2,
}

impl Line {
    /// Intersection with another line; errors when parallel.
    pub fn intersect(&self, other: &Line) -> Result<Vec2> {
        let den = det2(self.dir, other.dir);
        if den.abs() < 1e-300 {
            return Err(Error::Defect("lines are parallel".into()));
        }
        let t = det2(other.point - self.point, other.dir) / den;
        Ok(self.point + self.dir * t)
    }
}

/// The two supporting lines of a body through an external point.
///
/// `r` is the tangent whose touch point sees the segment from `p` to the
/// origin on its left (positive `det2(touch - p, -p)`); `s` the other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPair {
    pub p: Vec2,
    pub r: Line,
    pub s: Line,
    pub touch_r: Vec2,
    pub touch_s: Vec2,
}

/// The four points of the bisector construction plus the two bisector
/// directions and the parallelism defect of the chords.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorReport {
    /// Boundary point on the line through the origin parallel to `r`.
    pub x0: Vec2,
    /// Intersection of that line with `s`.
    pub x1: Vec2,
    /// Boundary point on the line through the origin parallel to `s`.
    pub y0: Vec2,
    /// Intersection of that line with `r`.
    pub y1: Vec2,
    /// Sum of the gauge-unit vectors along the two tangent rays.
    pub busemann_dir: Vec2,
    /// Direction of the line through the origin and `p`.
    pub glogovskii_dir: Vec2,
    /// Normalized |sine| of the angle between the chords `x1 y1` and `x0 y0`.
    pub parallelism_defect: f64,
}

/// Result of sweeping external points around a gauge ring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorSweep {
    pub passes: bool,
    pub worst_defect: f64,
    pub witness: Vec2,
}

/// The two tangents to the body through the external point `p`, found by
/// scanning which vertices see `p` along a supporting direction. When `p` is
/// collinear with an edge the touch segment is canonicalized to the endpoint
/// nearer `p`.
pub fn tangents_from(
    body: &CentrallySymmetricPolygon,
    p: Vec2,
    tol: &Tolerance,
) -> Result<TangentPair> {
    if body.gauge(p) <= 1.0 + tol.eps_geom {
        return Err(Error::PointNotOutside);
    }
    let n = body.len();
    let mut side_r: Option<Vec2> = None;
    let mut side_s: Option<Vec2> = None;
    for i in 0..n {
        let q = body.vertex(i);
        let dir = q - p;
        let din = body.edge_dir((i + n - 1) % n);
        let dout = body.edge_dir(i);
        if !cone_membership(din, dout, dir, tol.eps_geom) {
            continue;
        }
        let side = det2(dir, -p);
        let slot = if side > 0.0 { &mut side_r } else { &mut side_s };
        match slot {
            None => *slot = Some(q),
            Some(prev) => {
                // Edge-collinear tangency: keep the endpoint nearer p.
                if (q - p).len2() < (*prev - p).len2() {
                    *slot = Some(q);
                }
            }
        }
    }
    let touch_r = side_r.ok_or_else(|| Error::Defect("no supporting vertex on r side".into()))?;
    let touch_s = side_s.ok_or_else(|| Error::Defect("no supporting vertex on s side".into()))?;
    Ok(TangentPair {
        p,
        r: Line {
            point: p,
            dir: touch_r - p,
        },
        s: Line {
            point: p,
            dir: touch_s - p,
        },
        touch_r,
        touch_s,
    })
}

fn cone_membership(din: Vec2, dout: Vec2, y: Vec2, eps: f64) -> bool {
    let a = match din.normalized() {
        Ok(v) => v,
        Err(_) => return false,
    };
    let b = match dout.normalized() {
        Ok(v) => v,
        Err(_) => return false,
    };
    let y = match y.normalized() {
        Ok(v) => v,
        Err(_) => return false,
    };
    let hit = |u: Vec2| det2(a, u) >= -eps && det2(u, b) >= -eps;
    hit(y) || hit(-y)
}

/// Runs the bisector construction at the external point `p`.
///
/// Of the two intersections of each origin-parallel line with the boundary,
/// the one on the same side of the origin as the corresponding touch point is
/// taken (decomposing the touch point over the basis `(direction, p)`).
pub fn bisector_construction(
    body: &CentrallySymmetricPolygon,
    p: Vec2,
    tol: &Tolerance,
) -> Result<BisectorReport> {
    let tp = tangents_from(body, p, tol)?;
    let d_r = tp.r.dir;
    let d_s = tp.s.dir;

    let signed_boundary = |dir: Vec2, touch: Vec2| -> Result<Vec2> {
        let den = det2(dir, p);
        if den.abs() < 1e-300 {
            return Err(Error::Defect("tangent direction is parallel to op".into()));
        }
        let alpha = det2(touch, p) / den;
        let hit = body.ray_boundary_point(dir)?;
        Ok(if alpha >= 0.0 { hit } else { -hit })
    };

    let x0 = signed_boundary(d_r, tp.touch_r)?;
    let y0 = signed_boundary(d_s, tp.touch_s)?;
    let x1 = Line {
        point: Vec2::ZERO,
        dir: d_r,
    }
    .intersect(&tp.s)?;
    let y1 = Line {
        point: Vec2::ZERO,
        dir: d_s,
    }
    .intersect(&tp.r)?;

    let c0 = x0 - y0;
    let c1 = x1 - y1;
    if c0.len2() <= tol.eps_geom || c1.len2() <= tol.eps_geom {
        return Err(Error::DegenerateChord);
    }
    let parallelism_defect = det2(c1, c0).abs() / (c1.len2() * c0.len2());

    let g = GaugeNorm::new(body.clone());
    let busemann_dir = g.unit_vector(d_r)? + g.unit_vector(d_s)?;

    Ok(BisectorReport {
        x0,
        x1,
        y0,
        y1,
        busemann_dir,
        glogovskii_dir: p,
        parallelism_defect,
    })
}

/// Evaluates the construction at `ring_samples` points on the gauge-two ring
/// of the body (affine-equivariant placement) and reports the worst defect.
pub fn bisector_parallelism_sweep(
    body: &CentrallySymmetricPolygon,
    ring_samples: usize,
    tol: &Tolerance,
) -> Result<BisectorSweep> {
    if ring_samples < 8 {
        return Err(Error::InvalidTolerance);
    }
    let mut worst = 0.0f64;
    let mut witness = Vec2::ZERO;
    for k in 0..ring_samples {
        let u = k as f64 / ring_samples as f64;
        let p = body.boundary_point_at(u) * 2.0;
        let report = bisector_construction(body, p, tol)?;
        if report.parallelism_defect > worst {
            worst = report.parallelism_defect;
            witness = p;
        }
    }
    Ok(BisectorSweep {
        passes: worst <= tol.eps_norm,
        worst_defect: worst,
        witness,
    })
}
