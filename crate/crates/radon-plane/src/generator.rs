//! Generator arcs and their support machinery.
//!
//! A generator arc is a convex vertex chain from `w = (0, 1)` to `v = (1, 0)`
//! inside the unit parallelogram quadrant. Its support function against the
//! chord direction family `z(t) = (1 - t) w - t v` is piecewise linear; the
//! reciprocal of that function scales the chord onto the dual arc in the
//! second quadrant.

use crate::error::{Error, Result};
use crate::geom::{det2, Vec2};
use crate::poly::{convex_cycle_orientation, merge_collinear_open, Polyline};
use crate::tolerance::Tolerance;

/// Convex arc from `w` to `v` seeding the Radon curve construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorArc {
    vertices: Vec<Vec2>,
    tol: Tolerance,
}

/// Chord point `z(t) = (1 - t) w - t v = (-t, 1 - t)` for `t` in `[0, 1]`.
#[inline]
pub fn chord_point(t: f64) -> Vec2 {
    Vec2::new(-t, 1.0 - t)
}

fn check_param(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange { value: t })
    }
}

impl GeneratorArc {
    /// Validates a raw vertex chain into a generator arc.
    ///
    /// Consecutive duplicates and collinear runs are merged; endpoints may be
    /// off by `eps_geom` and are snapped to exactly `w` and `v`. Rejection
    /// names the violated invariant: endpoint mismatch, a vertex outside the
    /// unit parallelogram, or convexity failure of the o-w-arc-v cycle.
    pub fn new(raw: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooFewVertices {
                needed: 2,
                got: raw.len(),
            });
        }
        let eps = tol.eps_geom;
        let mut verts = merge_collinear_open(&raw, eps)?;
        let first = verts[0];
        let last = verts[verts.len() - 1];
        if !(first - Vec2::BASIS_W).is_zero(eps) || !(last - Vec2::BASIS_V).is_zero(eps) {
            return Err(Error::EndpointMismatch);
        }
        let n = verts.len();
        verts[0] = Vec2::BASIS_W;
        verts[n - 1] = Vec2::BASIS_V;

        // Convexity of the closed cycle o -> w -> arc -> v -> o. Checked
        // before the box bounds so that a pulled-in vertex is reported as a
        // convexity failure.
        let mut cycle = Vec::with_capacity(n + 1);
        cycle.push(Vec2::ZERO);
        cycle.extend_from_slice(&verts);
        convex_cycle_orientation(&cycle, tol).map_err(|e| match e {
            Error::NotConvex(msg) => Error::NotConvex(format!("o-w-arc-v cycle: {msg}")),
            other => other,
        })?;

        for (i, p) in verts.iter().enumerate() {
            if p.a < -eps || p.a > 1.0 + eps || p.b < -eps || p.b > 1.0 + eps {
                return Err(Error::OutsideParallelogram { index: i });
            }
            // Implied by convexity; asserted for robustness.
            if p.a + p.b < 1.0 - eps {
                return Err(Error::NotConvex(format!(
                    "vertex {i} lies strictly below the chord from w to v"
                )));
            }
        }
        Ok(GeneratorArc {
            vertices: verts,
            tol: *tol,
        })
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

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    /// Support value `s(t)`: the maximum of `|det2(x, z(t))|` over the arc.
    ///
    /// A linear functional over a convex chain is extremal at a vertex, so
    /// the vertex maximum is exact. Satisfies
    /// `max(t, 1 - t) <= s(t) <= 1`, with `s(0) = s(1) = 1`.
    pub fn support_value(&self, t: f64) -> Result<f64> {
        check_param(t)?;
        let z = chord_point(t);
        let mut best = 0.0f64;
        for &x in &self.vertices {
            let val = det2(x, z).abs();
            if val > best {
                best = val;
            }
        }
        Ok(best)
    }

    /// Exact piecewise-linear representation of the support function: the
    /// upper envelope of the per-vertex affine functions
    /// `t -> det2(x_i, z(t)) = a_i + t (b_i - a_i)`.
    pub fn support_profile(&self) -> SupportProfile {
        // Walking the arc from w to v, `a` is non-decreasing and `b` is
        // non-increasing (convexity inside the box), so the slopes b - a are
        // strictly decreasing after the collinear merge. Processing vertices
        // from v back to w therefore feeds the envelope stack in increasing
        // slope order.
        struct Piece {
            vertex: usize,
            start: f64, // lambda where this piece becomes active
        }
        let line = |i: usize| {
            let x = self.vertices[i];
            (x.b - x.a, x.a) // (slope, intercept)
        };
        let eval = |i: usize, t: f64| {
            let (m, c) = line(i);
            c + m * t
        };
        let mut stack: Vec<Piece> = Vec::new();
        for i in (0..self.vertices.len()).rev() {
            let (m_i, c_i) = line(i);
            let mut skip = false;
            while let Some(top) = stack.last() {
                let (m_t, c_t) = line(top.vertex);
                if (m_i - m_t).abs() <= 1e-15 {
                    // Nearly parallel; keep the higher line.
                    if c_i <= c_t {
                        skip = true;
                        break;
                    }
                    stack.pop();
                    continue;
                }
                let crossing = (c_t - c_i) / (m_i - m_t);
                if crossing <= top.start {
                    stack.pop();
                } else {
                    break;
                }
            }
            if skip {
                continue;
            }
            let start = match stack.last() {
                None => f64::NEG_INFINITY,
                Some(top) => {
                    let (m_t, c_t) = line(top.vertex);
                    (c_t - c_i) / (m_i - m_t)
                }
            };
            stack.push(Piece { vertex: i, start });
        }

        // Clip the envelope to [0, 1] and drop empty pieces.
        let mut entries: Vec<ProfileEntry> = Vec::new();
        let mut last_vertex = stack[0].vertex;
        for (k, piece) in stack.iter().enumerate() {
            let start = piece.start.max(0.0);
            let end = match stack.get(k + 1) {
                Some(next) => next.start.min(1.0),
                None => 1.0,
            };
            if end - start <= 1e-15 {
                continue;
            }
            entries.push(ProfileEntry {
                lambda: start,
                value: eval(piece.vertex, start),
                vertex: piece.vertex,
            });
            last_vertex = piece.vertex;
        }
        entries.push(ProfileEntry {
            lambda: 1.0,
            value: eval(last_vertex, 1.0),
            vertex: last_vertex,
        });
        SupportProfile { entries }
    }

    /// Point of the dual arc: `z(t) / s(t)`.
    ///
    /// Runs from `w` at `t = 0` to `-v` at `t = 1`; the endpoint support
    /// values are exactly one, so no division guard is needed there.
    pub fn dual_arc_point(&self, t: f64) -> Result<Vec2> {
        let s = self.support_value(t)?;
        Ok(chord_point(t) * (1.0 / s))
    }

    /// The exact polygonal dual arc.
    ///
    /// On each maximal interval where one arc vertex `x` is the support
    /// argmax, the dual arc lies on the line `{ p : det2(x, p) = 1 }`, so its
    /// vertices are the dual points at the profile breakpoints.
    pub fn dual_arc(&self) -> Polyline {
        let profile = self.support_profile();
        let mut pts: Vec<Vec2> = Vec::with_capacity(profile.entries().len());
        for entry in profile.entries() {
            let lambda = entry.lambda;
            // Skip breakpoints hugging the endpoints; the endpoints are
            // emitted exactly below.
            if lambda > 1e-12 && lambda < 1.0 - 1e-12 {
                let p = chord_point(lambda) * (1.0 / entry.value);
                pts.push(p);
            }
        }
        let mut verts = Vec::with_capacity(pts.len() + 2);
        verts.push(Vec2::BASIS_W);
        verts.extend(pts);
        verts.push(-Vec2::BASIS_V);
        Polyline::new(verts, &self.tol).expect("dual arc vertices are distinct")
    }

    /// Maximum ray-wise error of re-dualizing the dual arc back onto the
    /// generator arc, over a uniform parameter grid.
    ///
    /// Exact polygonal duals reconstruct exactly; the returned error is pure
    /// floating rounding for valid arcs.
    pub fn dual_reconstruction_error(&self, grid: usize) -> f64 {
        assert!(grid >= 2, "grid must have at least 2 points");
        let dual = self.dual_arc();
        let mut worst = 0.0f64;
        for k in 0..grid {
            let theta = k as f64 / (grid - 1) as f64;
            let u = Vec2::new(theta, 1.0 - theta);
            let mut denom = 0.0f64;
            for &y in dual.vertices() {
                let val = det2(y, u).abs();
                if val > denom {
                    denom = val;
                }
            }
            let recon = u * (1.0 / denom);
            let truth = self
                .ray_point(u)
                .expect("ray through the first-quadrant chord meets the arc");
            let err = (recon - truth).len2();
            if err > worst {
                worst = err;
            }
        }
        worst
    }

    /// Intersection of the arc with the ray from the origin through `u`.
    pub fn ray_point(&self, u: Vec2) -> Result<Vec2> {
        if u.a == 0.0 && u.b == 0.0 {
            return Err(Error::ZeroVector);
        }
        for i in 0..self.vertices.len() - 1 {
            let p = self.vertices[i];
            let q = self.vertices[i + 1];
            let den = det2(u, q - p);
            if den.abs() < 1e-300 {
                continue;
            }
            let s = -det2(u, p) / den;
            if (-1e-9..=1.0 + 1e-9).contains(&s) {
                let point = p + (q - p) * s.clamp(0.0, 1.0);
                // Same-side check: the arc lives in the closed first quadrant.
                if point.a * u.a + point.b * u.b > 0.0 {
                    return Ok(point);
                }
            }
        }
        Err(Error::Defect("ray does not meet the arc".into()))
    }
}

/// Breakpoint representation of the piecewise-linear support function.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportProfile {
    entries: Vec<ProfileEntry>,
}

/// One breakpoint: `vertex` is the support argmax on the interval starting at
/// `lambda`; the final entry (at `lambda = 1`) repeats the last interval's
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileEntry {
    pub lambda: f64,
    pub value: f64,
    pub vertex: usize,
}

impl SupportProfile {
    pub fn entries(&self) -> &[ProfileEntry] {
        &self.entries
    }

    /// Breakpoints strictly inside (0, 1), where the argmax vertex changes.
    pub fn interior_breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries
            .iter()
            .map(|e| e.lambda)
            .filter(|&l| l > 0.0 && l < 1.0)
    }

    /// Evaluates the support function by linear interpolation between
    /// breakpoints (exact: the function is affine on each interval).
    pub fn value(&self, t: f64) -> f64 {
        let e = &self.entries;
        if t <= e[0].lambda {
            return e[0].value;
        }
        for k in 0..e.len() - 1 {
            if t <= e[k + 1].lambda {
                let span = e[k + 1].lambda - e[k].lambda;
                let frac = if span > 0.0 { (t - e[k].lambda) / span } else { 0.0 };
                return e[k].value + frac * (e[k + 1].value - e[k].value);
            }
        }
        e[e.len() - 1].value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn segment_arc() -> GeneratorArc {
        GeneratorArc::new(vec![Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)], &tol()).unwrap()
    }

    fn square_arc() -> GeneratorArc {
        GeneratorArc::new(
            vec![Vec2::new(0.0, 1.0), Vec2::new(1.0, 1.0), Vec2::new(1.0, 0.0)],
            &tol(),
        )
        .unwrap()
    }

    fn circle_arc(n: usize) -> GeneratorArc {
        let mut verts = Vec::with_capacity(n);
        for i in 0..n {
            let theta = std::f64::consts::FRAC_PI_2 * i as f64 / (n - 1) as f64;
            verts.push(Vec2::new(theta.sin(), theta.cos()));
        }
        GeneratorArc::new(verts, &tol()).unwrap()
    }

    #[test]
    fn accepts_segment_and_square_arcs() {
        assert_eq!(segment_arc().len(), 2);
        assert_eq!(square_arc().len(), 3);
    }

    #[test]
    fn rejects_pulled_in_vertex_as_convexity_failure() {
        let err = GeneratorArc::new(
            vec![
                Vec2::new(0.0, 1.0),
                Vec2::new(0.2, 0.2),
                Vec2::new(1.0, 0.0),
            ],
            &tol(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("convexity"), "{err}");
    }

    #[test]
    fn rejects_endpoint_mismatch() {
        let err = GeneratorArc::new(
            vec![Vec2::new(0.1, 1.0), Vec2::new(1.0, 0.0)],
            &tol(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch));
    }

    #[test]
    fn rejects_vertex_outside_parallelogram() {
        let err = GeneratorArc::new(
            vec![
                Vec2::new(0.0, 1.0),
                Vec2::new(0.9, 1.2),
                Vec2::new(1.0, 0.0),
            ],
            &tol(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::OutsideParallelogram { .. }));
    }

    #[test]
    fn support_value_on_segment_arc() {
        let arc = segment_arc();
        assert!((arc.support_value(0.5).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn support_value_on_square_arc_is_one() {
        let arc = square_arc();
        for t in [0.0, 0.2, 0.5, 0.77, 1.0] {
            assert!((arc.support_value(t).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn support_value_is_one_at_endpoints() {
        for arc in [segment_arc(), square_arc(), circle_arc(17)] {
            assert_eq!(arc.support_value(0.0).unwrap(), 1.0);
            assert_eq!(arc.support_value(1.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn support_value_rejects_out_of_range() {
        assert!(segment_arc().support_value(1.5).is_err());
        assert!(segment_arc().support_value(-0.1).is_err());
    }

    #[test]
    fn profile_of_segment_arc_breaks_at_half() {
        let profile = segment_arc().support_profile();
        let breaks: Vec<f64> = profile.interior_breakpoints().collect();
        assert_eq!(breaks.len(), 1);
        assert!((breaks[0] - 0.5).abs() < 1e-15);
        // s(t) = max(1 - t, t)
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            assert!((profile.value(t) - (1.0 - t).max(t)).abs() < 1e-15);
        }
    }

    #[test]
    fn profile_of_square_arc_has_single_active_vertex() {
        let profile = square_arc().support_profile();
        assert_eq!(profile.interior_breakpoints().count(), 0);
        assert_eq!(profile.entries().len(), 2);
        assert_eq!(profile.entries()[0].vertex, 1); // v + w
        assert!((profile.value(0.3) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn profile_matches_closed_form_for_circle_arc() {
        // Dense-sampling oracle against the Euclidean closed form
        // sqrt(t^2 + (1 - t)^2); the gap is bounded by the inscription error.
        let arc = circle_arc(64);
        let profile = arc.support_profile();
        for k in 0..=1000 {
            let t = k as f64 / 1000.0;
            let exact = (t * t + (1.0 - t) * (1.0 - t)).sqrt();
            assert!(
                (profile.value(t) - exact).abs() < 5e-4,
                "t = {t}: {} vs {exact}",
                profile.value(t)
            );
        }
    }

    #[test]
    fn profile_agrees_with_support_value() {
        for arc in [segment_arc(), square_arc(), circle_arc(33)] {
            let profile = arc.support_profile();
            for k in 0..=500 {
                let t = k as f64 / 500.0;
                assert!((profile.value(t) - arc.support_value(t).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dual_point_examples() {
        let arc = segment_arc();
        let p = arc.dual_arc_point(0.5).unwrap();
        assert!((p - Vec2::new(-1.0, 1.0)).is_zero(1e-15));

        for arc in [segment_arc(), square_arc(), circle_arc(9)] {
            assert_eq!(arc.dual_arc_point(0.0).unwrap(), Vec2::new(0.0, 1.0));
            assert_eq!(arc.dual_arc_point(1.0).unwrap(), Vec2::new(-1.0, 0.0));
        }

        let p = square_arc().dual_arc_point(0.25).unwrap();
        assert!((p - Vec2::new(-0.25, 0.75)).is_zero(1e-15));
    }

    #[test]
    fn dual_arc_of_segment_is_two_edges_through_w_minus_v() {
        let dual = segment_arc().dual_arc();
        let expect = [
            Vec2::new(0.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, 0.0),
        ];
        assert_eq!(dual.vertices(), &expect);
    }

    #[test]
    fn dual_arc_of_square_is_single_segment() {
        let dual = square_arc().dual_arc();
        assert_eq!(
            dual.vertices(),
            &[Vec2::new(0.0, 1.0), Vec2::new(-1.0, 0.0)]
        );
    }

    #[test]
    fn dual_arc_of_circle_stays_near_unit_circle() {
        // The Euclidean circle is self-dual under this construction.
        let dual = circle_arc(64).dual_arc();
        for &p in dual.vertices() {
            assert!((p.len2() - 1.0).abs() < 5e-4);
        }
    }

    #[test]
    fn reconstruction_is_exact_for_polygonal_fixtures() {
        assert!(segment_arc().dual_reconstruction_error(101) <= 1e-12);
        assert!(square_arc().dual_reconstruction_error(101) <= 1e-12);
    }

    #[test]
    fn support_bounds_hold_on_grid() {
        for arc in [segment_arc(), square_arc(), circle_arc(21)] {
            for k in 0..=200 {
                let t = k as f64 / 200.0;
                let s = arc.support_value(t).unwrap();
                assert!(s >= (1.0 - t).max(t) - 1e-12);
                assert!(s <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn dense_edge_sampling_matches_vertex_max() {
        // Brute-force oracle: a linear functional on a segment is extremal at
        // the segment endpoints.
        let arc = circle_arc(15);
        for k in 0..=40 {
            let t = k as f64 / 40.0;
            let z = chord_point(t);
            let mut dense = 0.0f64;
            let verts = arc.vertices();
            for i in 0..verts.len() - 1 {
                for j in 0..=250 {
                    let u = j as f64 / 250.0;
                    let p = verts[i] + (verts[i + 1] - verts[i]) * u;
                    dense = dense.max(det2(p, z).abs());
                }
            }
            assert!((dense - arc.support_value(t).unwrap()).abs() <= 1e-12);
        }
    }
}
