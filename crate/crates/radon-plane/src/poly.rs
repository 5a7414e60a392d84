//! Polylines, centrally symmetric convex polygons, and the shared geometric
//! predicates (convexity of a cycle, ray-boundary intersection, supporting
//! cones).

use crate::error::{Error, Result};
use crate::geom::{det2, Vec2};
use crate::tolerance::Tolerance;

/// Open polygonal chain with at least two vertices and no consecutive
/// duplicates.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Vec2>,
}

impl Polyline {
    pub fn new(vertices: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices {
                needed: 2,
                got: vertices.len(),
            });
        }
        for pair in vertices.windows(2) {
            if (pair[1] - pair[0]).is_zero(tol.eps_geom) {
                return Err(Error::Defect("duplicate consecutive vertices".into()));
            }
        }
        Ok(Polyline { vertices })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Coordinate dot product; parametrization plumbing only.
#[inline]
fn dot(x: Vec2, y: Vec2) -> f64 {
    x.a * y.a + x.b * y.b
}

/// Drops consecutive duplicates and merges collinear forward runs in an open
/// chain. A reversal (zero turn with the direction flipped) is rejected.
pub fn merge_collinear_open(vertices: &[Vec2], eps: f64) -> Result<Vec<Vec2>> {
    let mut out: Vec<Vec2> = Vec::with_capacity(vertices.len());
    for &p in vertices {
        if let Some(&last) = out.last() {
            if (p - last).is_zero(eps) {
                continue;
            }
        }
        while out.len() >= 2 {
            let n = out.len();
            let e0 = out[n - 1] - out[n - 2];
            let e1 = p - out[n - 1];
            let cross = det2(e0, e1);
            if cross.abs() <= eps {
                if dot(e0, e1) < 0.0 {
                    return Err(Error::NotConvex(
                        "chain reverses direction at a collinear vertex".into(),
                    ));
                }
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Turn data of a closed cycle: consecutive cross products, or a diagnostic.
fn cycle_turns(vertices: &[Vec2], eps: f64) -> Result<Vec<f64>> {
    let n = vertices.len();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, got: n });
    }
    let mut crosses = Vec::with_capacity(n);
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let r = vertices[(i + 2) % n];
        let e0 = q - p;
        let e1 = r - q;
        if e0.is_zero(eps) {
            return Err(Error::Defect("duplicate consecutive vertices".into()));
        }
        let cross = det2(e0, e1);
        if cross.abs() <= eps && dot(e0, e1) < 0.0 {
            return Err(Error::NotConvex("cycle reverses direction".into()));
        }
        crosses.push(cross);
    }
    Ok(crosses)
}

/// True iff the closed cycle is convex: all consecutive turn cross products
/// share one sign within `eps_geom` and the total turning is one full turn.
///
/// Degenerate (all collinear) input is reported as non-convex.
pub fn is_convex_cyclic(vertices: &[Vec2], tol: &Tolerance) -> bool {
    convex_cycle_orientation(vertices, tol).is_ok()
}

/// Orientation of a convex cycle: `1.0` for counterclockwise, `-1.0` for
/// clockwise. Errors carry the violated property.
pub fn convex_cycle_orientation(vertices: &[Vec2], tol: &Tolerance) -> Result<f64> {
    let eps = tol.eps_geom;
    let crosses = cycle_turns(vertices, eps)?;
    let mut sign = 0.0;
    for &c in &crosses {
        if c > eps && sign >= 0.0 {
            sign = 1.0;
        } else if c < -eps && sign <= 0.0 {
            sign = -1.0;
        } else if c.abs() > eps {
            return Err(Error::NotConvex("turns do not share one sign".into()));
        }
    }
    if sign == 0.0 {
        return Err(Error::NotConvex("all vertices are collinear".into()));
    }
    // Total turning must be a single full turn; this rejects self-overlapping
    // star cycles whose turns all share one sign.
    let n = vertices.len();
    let mut total = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let r = vertices[(i + 2) % n];
        let e0 = q - p;
        let e1 = r - q;
        total += det2(e0, e1).atan2(dot(e0, e1));
    }
    if (total.abs() - std::f64::consts::TAU).abs() > 1e-6 {
        return Err(Error::NotConvex("total turning is not one full turn".into()));
    }
    Ok(sign)
}

/// A convex polygon with vertices in counterclockwise order, centrally
/// symmetric about the origin, with the origin strictly interior.
#[derive(Debug, Clone, PartialEq)]
pub struct CentrallySymmetricPolygon {
    vertices: Vec<Vec2>,
}

impl CentrallySymmetricPolygon {
    /// Canonicalizing constructor: deduplicates, merges collinear runs,
    /// orients counterclockwise, then validates all invariants.
    pub fn new(vertices: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        let mut verts = merge_collinear_cycle(&vertices, tol.eps_geom)?;
        let sign = convex_cycle_orientation(&verts, tol)?;
        if sign < 0.0 {
            verts.reverse();
        }
        Self::from_cycle(verts, tol)
    }

    /// Validating constructor that preserves the vertex list as given
    /// (counterclockwise required; collinear consecutive edges permitted).
    /// Used by exact constructions whose seam vertices must survive.
    pub fn from_cycle(vertices: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        let n = vertices.len();
        if n < 4 {
            return Err(Error::TooFewVertices { needed: 4, got: n });
        }
        let sign = convex_cycle_orientation(&vertices, tol)?;
        if sign < 0.0 {
            return Err(Error::NotConvex("cycle is clockwise".into()));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::NotCentrallySymmetric);
        }
        let half = n / 2;
        for i in 0..half {
            if !(vertices[i] + vertices[i + half]).is_zero(tol.eps_geom) {
                return Err(Error::NotCentrallySymmetric);
            }
        }
        // Origin strictly left of every directed edge.
        for i in 0..n {
            if det2(vertices[i], vertices[(i + 1) % n]) <= tol.eps_geom {
                return Err(Error::OriginNotInterior);
            }
        }
        Ok(CentrallySymmetricPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Directed edge `i`, from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edge_dir(&self, i: usize) -> Vec2 {
        let (p, q) = self.edge(i);
        q - p
    }

    /// Index of the antipodal vertex.
    pub fn antipode_index(&self, i: usize) -> usize {
        let n = self.vertices.len();
        (i + n / 2) % n
    }

    /// Gauge functional (Minkowski functional) of the polygon: the unique
    /// `t >= 0` with `x / t` on the boundary, and `0` at the origin.
    ///
    /// Built from the support representation: for edge `(p, q)` the boundary
    /// line is `{ x : det2(x, q - p) = det2(p, q) }`, so the gauge is the
    /// maximum of `det2(x, q - p) / det2(p, q)` over all edges.
    pub fn gauge(&self, x: Vec2) -> f64 {
        let n = self.vertices.len();
        let mut best = f64::NEG_INFINITY;
        for i in 0..n {
            let (p, q) = self.edge(i);
            let h = det2(x, q - p) / det2(p, q);
            if h > best {
                best = h;
            }
        }
        best.max(0.0)
    }

    /// The unique point of the boundary on the open ray from the origin
    /// through `direction`. Positively homogeneous of degree zero.
    pub fn ray_boundary_point(&self, direction: Vec2) -> Result<Vec2> {
        if direction.a == 0.0 && direction.b == 0.0 {
            return Err(Error::ZeroVector);
        }
        let g = self.gauge(direction);
        if g <= 0.0 {
            return Err(Error::Defect("gauge of a nonzero direction is zero".into()));
        }
        Ok(direction * (1.0 / g))
    }

    pub fn contains(&self, x: Vec2, eps: f64) -> bool {
        self.gauge(x) <= 1.0 + eps
    }

    /// Supporting cone at the boundary point along `x`: the pair of edge
    /// directions `(incoming, outgoing)` whose fan spans the supporting line
    /// directions at `x / gauge(x)`. Both entries coincide when the point is
    /// interior to an edge.
    pub fn supporting_cone(&self, x: Vec2, tol: &Tolerance) -> Result<(Vec2, Vec2)> {
        if x.a == 0.0 && x.b == 0.0 {
            return Err(Error::ZeroVector);
        }
        let n = self.vertices.len();
        let mut vals = Vec::with_capacity(n);
        let mut best = f64::NEG_INFINITY;
        let mut best_i = 0;
        for i in 0..n {
            let (p, q) = self.edge(i);
            let h = det2(x, q - p) / det2(p, q);
            if h > best {
                best = h;
                best_i = i;
            }
            vals.push(h);
        }
        let window = tol.eps_geom * best.abs().max(1.0);
        let active = |i: usize| vals[i] >= best - window;
        // Active edges are cyclically contiguous; walk out from the argmax.
        let mut first = best_i;
        while active((first + n - 1) % n) && (first + n - 1) % n != best_i {
            first = (first + n - 1) % n;
        }
        let mut last = best_i;
        while active((last + 1) % n) && (last + 1) % n != best_i {
            last = (last + 1) % n;
        }
        Ok((self.edge_dir(first), self.edge_dir(last)))
    }

    /// Boundary point at cyclic parameter `u` in `[0, 1)`, measured by edge
    /// index plus fraction. Affine parametrization; no Euclidean arc length.
    pub fn boundary_point_at(&self, u: f64) -> Vec2 {
        let n = self.vertices.len();
        let t = (u.rem_euclid(1.0)) * n as f64;
        let i = (t.floor() as usize).min(n - 1);
        let frac = t - i as f64;
        let (p, q) = self.edge(i);
        p + (q - p) * frac
    }

    /// Cyclic boundary coordinate of a point known to lie on the boundary:
    /// edge index plus fraction in `[0, n)`.
    pub fn locate_boundary(&self, p: Vec2, tol: &Tolerance) -> Result<f64> {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            let e = b - a;
            let off = p - a;
            if det2(e, off).abs() > tol.eps_geom * e.len2().max(1.0) {
                continue;
            }
            let t = dot(off, e) / dot(e, e);
            if (-tol.eps_geom..=1.0 + tol.eps_geom).contains(&t) {
                return Ok(i as f64 + t.clamp(0.0, 1.0));
            }
        }
        Err(Error::Defect("point does not lie on the boundary".into()))
    }

    /// Deterministic boundary sample points: all vertices and edge midpoints,
    /// padded with extra per-edge points until at least `min_count`.
    pub fn boundary_samples(&self, min_count: usize) -> Vec<Vec2> {
        self.boundary_sample_cones(min_count)
            .into_iter()
            .map(|(p, _, _)| p)
            .collect()
    }

    /// Boundary samples paired with their exact supporting cones
    /// `(point, incoming, outgoing)`. Vertices carry their two adjacent edge
    /// directions, interior edge points the edge direction twice. Exact by
    /// construction, so sweeps do not depend on a tolerance window to locate
    /// the cone of their own sample points.
    pub fn boundary_sample_cones(&self, min_count: usize) -> Vec<(Vec2, Vec2, Vec2)> {
        let n = self.vertices.len();
        let mut per_edge = 2usize; // endpoint + midpoint
        while n * per_edge < min_count {
            per_edge += 1;
        }
        let mut out = Vec::with_capacity(n * per_edge);
        for i in 0..n {
            let (p, q) = self.edge(i);
            let dir = q - p;
            out.push((p, self.edge_dir((i + n - 1) % n), dir));
            for k in 1..per_edge {
                let t = k as f64 / per_edge as f64;
                out.push((p + dir * t, dir, dir));
            }
        }
        out
    }
}

/// Collinear merge over a closed cycle, including the wrap-around seams.
fn merge_collinear_cycle(vertices: &[Vec2], eps: f64) -> Result<Vec<Vec2>> {
    let mut verts = merge_collinear_open(vertices, eps)?;
    // Resolve seam collinearity and duplicate closure at the cycle joints.
    loop {
        let n = verts.len();
        if n < 3 {
            return Err(Error::TooFewVertices { needed: 3, got: n });
        }
        if (verts[0] - verts[n - 1]).is_zero(eps) {
            verts.pop();
            continue;
        }
        let e_last = verts[0] - verts[n - 1];
        let e_first = verts[1] - verts[0];
        if det2(e_last, e_first).abs() <= eps && dot(e_last, e_first) > 0.0 {
            verts.remove(0);
            continue;
        }
        let e_prev = verts[n - 1] - verts[n - 2];
        if det2(e_prev, e_last).abs() <= eps && dot(e_prev, e_last) > 0.0 {
            verts.pop();
            continue;
        }
        break;
    }
    Ok(verts)
}

/// True iff `x` lies in the convex polygon given as a counterclockwise cycle,
/// within absolute slack `eps` on each edge half-plane.
pub fn point_in_convex_ccw(x: Vec2, cycle: &[Vec2], eps: f64) -> bool {
    let n = cycle.len();
    (0..n).all(|i| {
        let p = cycle[i];
        let q = cycle[(i + 1) % n];
        det2(q - p, x - p) >= -eps
    })
}
