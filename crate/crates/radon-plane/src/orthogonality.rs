//! Birkhoff orthogonality and the characterizations that separate Radon
//! norms from the rest: symmetry of the relation, homothety of circle and
//! anticircle, and constancy of the Birkhoff rectangle area.

use crate::error::{Error, Result};
use crate::gauge::GaugeNorm;
use crate::geom::{det2, Vec2};
use crate::poly::CentrallySymmetricPolygon;
use crate::tolerance::Tolerance;

/// True iff the (unoriented) direction `y` lies in the closed fan swept
/// counterclockwise from `din` to `dout`. Directions are normalized before
/// the sign tests so the slack is scale-free.
fn in_cone(din: Vec2, dout: Vec2, y: Vec2, eps: f64) -> bool {
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

/// Scale-free distance from the unoriented direction `x` to the cone
/// `[din, dout]`: zero inside, otherwise the |sine| of the angular gap to the
/// nearest cone boundary ray.
fn cone_defect(din: Vec2, dout: Vec2, x: Vec2, eps: f64) -> f64 {
    if in_cone(din, dout, x, eps) {
        return 0.0;
    }
    let a = din.normalized().expect("cone rays are nonzero");
    let b = dout.normalized().expect("cone rays are nonzero");
    let x = x.normalized().expect("probe direction is nonzero");
    let gap = |u: Vec2| det2(a, u).abs().min(det2(u, b).abs());
    gap(x).min(gap(-x))
}

/// Witness data for a failed symmetry sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryDefect {
    pub defect: f64,
    /// The offending pair `(x, y)`: `x` is Birkhoff orthogonal to `y`, but
    /// the reverse relation misses by `defect`. Absent when the sweep found
    /// no defect at all.
    pub witness: Option<(Vec2, Vec2)>,
}

/// Outcome of the Birkhoff rectangle area sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantAreaCheck {
    /// Whether the area was constant across the sweep (within `eps_norm`);
    /// constancy characterizes Radon norms.
    pub is_constant: bool,
    pub constant: f64,
    pub spread: f64,
}

/// Outcome of the circle/anticircle homothety test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomothetyCheck {
    pub is_homothet: bool,
    /// Estimated ratio `r` with `norm = r * antinorm`; meaningful only when
    /// `is_homothet` holds. Rescaling the form by `s` divides the ratio by `s`.
    pub ratio: f64,
}

impl GaugeNorm {
    /// Birkhoff orthogonality `x -| y`: the norm of `x` is minimal along the
    /// line `x + t y`, i.e. the line through `x / norm(x)` with direction `y`
    /// supports the unit ball.
    ///
    /// Decided exactly for polygons by supporting-cone membership; no
    /// numerical minimization is involved.
    pub fn is_birkhoff(&self, x: Vec2, y: Vec2, tol: &Tolerance) -> Result<bool> {
        if x == Vec2::ZERO || y == Vec2::ZERO {
            return Err(Error::ZeroVector);
        }
        let (din, dout) = self.body().supporting_cone(x, tol)?;
        Ok(in_cone(din, dout, y, tol.eps_geom))
    }

    /// How far the reverse relation `y -| x` misses when `x -| y` holds,
    /// maximized over a deterministic boundary sweep (all vertices and edge
    /// midpoints, padded to at least `samples` base points). For each base
    /// point the companions are the extremes of its supporting fan plus, at
    /// corners, the middle fan direction.
    ///
    /// Returns zero (within rounding) precisely on Radon curves.
    pub fn birkhoff_symmetry_defect(&self, samples: usize, tol: &Tolerance) -> SymmetryDefect {
        let mut worst = SymmetryDefect {
            defect: 0.0,
            witness: None,
        };
        for (x, din, dout) in self.body().boundary_sample_cones(samples) {
            for y in companion_fan(din, dout) {
                let (rin, rout) = self
                    .body()
                    .supporting_cone(y, tol)
                    .expect("companion directions are nonzero");
                let d = cone_defect(rin, rout, x, tol.eps_geom);
                if d > worst.defect {
                    worst = SymmetryDefect {
                        defect: d,
                        witness: Some((x, y)),
                    };
                }
            }
        }
        worst
    }

    /// Sweeps Birkhoff rectangles: for each unit vector `x` of the sweep and
    /// each unit companion `y` with `x -| y`, collects `|form(x, y)|`.
    /// The mean is the area constant, the max-min spread its defect.
    pub fn constant_area_check(&self, samples: usize, tol: &Tolerance) -> Result<ConstantAreaCheck> {
        if samples < 4 {
            return Err(Error::InvalidTolerance);
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut sum = 0.0;
        let mut count = 0usize;
        for (x, din, dout) in self.body().boundary_sample_cones(samples) {
            for dir in companion_fan(din, dout) {
                let y = self.unit_vector(dir)?;
                let area = self.form_scale() * det2(x, y).abs();
                lo = lo.min(area);
                hi = hi.max(area);
                sum += area;
                count += 1;
            }
        }
        let spread = hi - lo;
        Ok(ConstantAreaCheck {
            is_constant: spread <= tol.eps_norm,
            constant: sum / count as f64,
            spread,
        })
    }

    /// Tests whether the anticircle is a homothet of the unit circle
    /// (equivalently: the norm is a positive multiple of the antinorm).
    pub fn anticircle_homothety(&self, tol: &Tolerance) -> Result<HomothetyCheck> {
        let anti = self.anticircle(tol)?;
        // Probe ratio from any boundary point: norm = r * antinorm.
        let probe = self.body().vertex(0);
        let ratio = 1.0 / self.antinorm(probe);
        if anti.len() != self.body().len() {
            return Ok(HomothetyCheck {
                is_homothet: false,
                ratio,
            });
        }
        let n = anti.len();
        let target = self.body().vertex(0) * ratio;
        let offset = (0..n)
            .min_by(|&i, &j| {
                let di = (anti.vertex(i) - target).len2();
                let dj = (anti.vertex(j) - target).len2();
                di.partial_cmp(&dj).unwrap()
            })
            .unwrap();
        let eps = tol.eps_geom * ratio.max(1.0);
        let is_homothet = (0..n).all(|j| {
            (anti.vertex(offset + j) - self.body().vertex(j) * ratio).is_zero(eps)
        });
        Ok(HomothetyCheck { is_homothet, ratio })
    }
}

/// Companion directions spanned by a supporting fan: the two extremes plus,
/// at a genuine corner, the middle direction. The middle catches bodies whose
/// extreme companions are symmetric but whose interior fan is not (the unit
/// square is the canonical example).
fn companion_fan(din: Vec2, dout: Vec2) -> Vec<Vec2> {
    let a = din.normalized().expect("edge directions are nonzero");
    let b = dout.normalized().expect("edge directions are nonzero");
    if det2(a, b).abs() < 1e-14 {
        vec![a]
    } else {
        vec![a, a + b, b]
    }
}

/// A pair of boundary points that are mutually Birkhoff orthogonal
/// (conjugate diameters), found as the vertex pair maximizing `|det2|`.
///
/// At the joint maximum each point attains the other's antinorm supremum,
/// which is exactly the Birkhoff support condition, so the maximizing pair is
/// mutual. The first lexicographic index pair is returned, oriented so that
/// `det2(v, w) > 0`.
pub fn conjugate_diameters(body: &CentrallySymmetricPolygon) -> (Vec2, Vec2) {
    let verts = body.vertices();
    let n = verts.len();
    let mut best = f64::NEG_INFINITY;
    let mut pair = (0usize, 1usize);
    for i in 0..n {
        for j in (i + 1)..n {
            let val = det2(verts[i], verts[j]).abs();
            if val > best + 1e-15 {
                best = val;
                pair = (i, j);
            }
        }
    }
    let (v, w) = (verts[pair.0], verts[pair.1]);
    if det2(v, w) > 0.0 {
        (v, w)
    } else {
        (v, -w)
    }
}

/// Verifies the quadrant duality of supporting directions for a conjugate
/// pair `(v, w)` on the boundary: every supporting direction at a point
/// strictly inside the first-quadrant arc lies in the second quadrant of the
/// frame `{v, w}`, and every second-quadrant direction supports the body at
/// some first-quadrant boundary point.
pub fn quadrant_duality_check(
    body: &CentrallySymmetricPolygon,
    v: Vec2,
    w: Vec2,
    tol: &Tolerance,
) -> Result<bool> {
    let d = det2(v, w);
    if d.abs() <= tol.eps_geom {
        return Err(Error::Defect("conjugate pair is collinear".into()));
    }
    let coords = |y: Vec2| (det2(y, w) / d, det2(v, y) / d);
    let unoriented_q2 = |y: Vec2| {
        let (alpha, beta) = coords(y);
        let scale = alpha.abs().max(beta.abs()).max(1e-300);
        (alpha / scale) * (beta / scale) <= tol.eps_geom
    };

    let n = body.len();
    let pv = body.locate_boundary(v, tol)?;
    let pw = body.locate_boundary(w, tol)?;
    let span = (pw - pv).rem_euclid(n as f64);

    // Part 1: supporting directions strictly inside the first-quadrant arc.
    // Probes are vertices and edge midpoints with their exact cones; the
    // cyclic coordinate of probe k of edge i is i + k / per_edge.
    let margin = 1e-9;
    let samples = body.boundary_sample_cones(0);
    let per_edge = samples.len() / n;
    for (k, (_, din, dout)) in samples.into_iter().enumerate() {
        let phi = (k / per_edge) as f64 + (k % per_edge) as f64 / per_edge as f64;
        let rel = (phi - pv).rem_euclid(n as f64);
        if rel <= margin || rel >= span - margin {
            continue;
        }
        if !unoriented_q2(din) || !unoriented_q2(dout) {
            return Ok(false);
        }
    }

    // Part 2: every second-quadrant direction supports at a first-quadrant
    // point, checked over the edge-direction fan plus the quadrant extremes.
    let mut dirs: Vec<Vec2> = vec![w, -v];
    for i in 0..n {
        let e = body.edge_dir(i);
        if unoriented_q2(e) {
            dirs.push(e);
        }
    }
    for y in dirs {
        let mut best = f64::NEG_INFINITY;
        for &p in body.vertices() {
            best = best.max(det2(p, y));
        }
        let window = tol.eps_geom * best.abs().max(1.0);
        let in_q1 = |p: Vec2| {
            let (alpha, beta) = coords(p);
            alpha >= -tol.eps_geom && beta >= -tol.eps_geom
        };
        let supported_in_q1 = body
            .vertices()
            .iter()
            .filter(|&&p| det2(p, y) >= best - window)
            .any(|&p| in_q1(p) || in_q1(-p));
        if !supported_in_q1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::RadonCurve;
    use crate::fixtures;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn euclidean_birkhoff_is_perpendicularity() {
        let g = GaugeNorm::new(fixtures::euclidean_ngon(256, &tol()).unwrap());
        assert!(g
            .is_birkhoff(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0), &tol())
            .unwrap());
        assert!(!g
            .is_birkhoff(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), &tol())
            .unwrap());
    }

    #[test]
    fn square_edge_point_supports_only_the_edge_direction() {
        let g = GaugeNorm::new(fixtures::unit_square(&tol()));
        // || (1,0) - 0.5 (1,1) ||_inf = 0.5 < 1, so (1,1) is not a companion.
        assert!(!g
            .is_birkhoff(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), &tol())
            .unwrap());
        assert!(g
            .is_birkhoff(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0), &tol())
            .unwrap());
    }

    #[test]
    fn square_corner_supports_the_adjacent_edge_line() {
        let g = GaugeNorm::new(fixtures::unit_square(&tol()));
        assert!(g
            .is_birkhoff(Vec2::new(1.0, 1.0), Vec2::new(1.0, 0.0), &tol())
            .unwrap());
    }

    #[test]
    fn birkhoff_rejects_zero_vectors() {
        let g = GaugeNorm::new(fixtures::hexagon(&tol()));
        assert!(g.is_birkhoff(Vec2::ZERO, Vec2::BASIS_V, &tol()).is_err());
        assert!(g.is_birkhoff(Vec2::BASIS_V, Vec2::ZERO, &tol()).is_err());
    }

    #[test]
    fn hexagon_symmetry_defect_vanishes() {
        let g = GaugeNorm::new(fixtures::hexagon(&tol()));
        let sweep = g.birkhoff_symmetry_defect(64, &tol());
        assert!(sweep.defect <= 1e-12, "defect {}", sweep.defect);
    }

    #[test]
    fn square_symmetry_defect_is_large() {
        let g = GaugeNorm::new(fixtures::unit_square(&tol()));
        let sweep = g.birkhoff_symmetry_defect(64, &tol());
        assert!(sweep.defect >= 0.1, "defect {}", sweep.defect);
        // The canonical witness pair: (1,1) -| (1,0) but not conversely.
        assert!(g
            .is_birkhoff(Vec2::new(1.0, 1.0), Vec2::new(1.0, 0.0), &tol())
            .unwrap());
        assert!(!g
            .is_birkhoff(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), &tol())
            .unwrap());
    }

    #[test]
    fn assembled_curves_have_symmetric_birkhoff() {
        let t = tol();
        for arc in [
            fixtures::segment_arc(&t),
            fixtures::square_arc(&t),
            fixtures::lp_arc(1.5, 48, &t).unwrap(),
        ] {
            let g = RadonCurve::assemble(&arc, &t).unwrap().gauge_norm();
            let sweep = g.birkhoff_symmetry_defect(64, &t);
            assert!(sweep.defect <= 1e-9, "defect {}", sweep.defect);
        }
    }

    #[test]
    fn conjugate_diameters_are_mutual() {
        let t = tol();
        for body in [
            fixtures::euclidean_ngon(256, &t).unwrap(),
            fixtures::unit_square(&t),
            fixtures::hexagon(&t),
        ] {
            let (v, w) = conjugate_diameters(&body);
            let g = GaugeNorm::new(body);
            assert!(g.is_birkhoff(v, w, &t).unwrap());
            assert!(g.is_birkhoff(w, v, &t).unwrap());
        }
    }

    #[test]
    fn hexagon_conjugate_pair_is_basis_pair() {
        let (v, w) = conjugate_diameters(&fixtures::hexagon(&tol()));
        assert!((det2(v, w).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadrant_duality_holds_for_fixtures() {
        let t = tol();
        for body in [
            fixtures::hexagon(&t),
            fixtures::unit_square(&t),
            fixtures::euclidean_ngon(64, &t).unwrap(),
        ] {
            let (v, w) = conjugate_diameters(&body);
            assert!(quadrant_duality_check(&body, v, w, &t).unwrap());
        }
    }

    #[test]
    fn hexagon_area_is_constant_one() {
        let g = GaugeNorm::new(fixtures::hexagon(&tol()));
        let check = g.constant_area_check(16, &tol()).unwrap();
        assert!(check.is_constant);
        assert!((check.constant - 1.0).abs() < 1e-12);
        assert!(check.spread <= 1e-12);
    }

    #[test]
    fn square_area_is_not_constant() {
        let g = GaugeNorm::new(fixtures::unit_square(&tol()));
        let check = g.constant_area_check(16, &tol()).unwrap();
        assert!(!check.is_constant);
        assert!(check.spread >= 0.5, "spread {}", check.spread);
    }

    #[test]
    fn hexagon_anticircle_is_homothet_ratio_one() {
        let g = GaugeNorm::new(fixtures::hexagon(&tol()));
        let check = g.anticircle_homothety(&tol()).unwrap();
        assert!(check.is_homothet);
        assert!((check.ratio - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rescaled_form_inverts_the_ratio() {
        let g = GaugeNorm::with_form_scale(fixtures::hexagon(&tol()), 2.0).unwrap();
        let check = g.anticircle_homothety(&tol()).unwrap();
        assert!(check.is_homothet);
        assert!((check.ratio - 0.5).abs() < 1e-12);
    }

    #[test]
    fn square_anticircle_is_not_homothet() {
        let g = GaugeNorm::new(fixtures::unit_square(&tol()));
        let check = g.anticircle_homothety(&tol()).unwrap();
        assert!(!check.is_homothet);
    }

    #[test]
    fn antinorm_supremum_attained_iff_birkhoff() {
        // The attaining vertices of sup |det2(y, x)| are exactly the
        // companions y -| x.
        let t = tol();
        let g = GaugeNorm::new(fixtures::hexagon(&t));
        let mut rng = fixtures::seeded_rng(11);
        use rand::Rng;
        for _ in 0..200 {
            let x = Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            if x.is_zero(1e-3) {
                continue;
            }
            let sup = g.antinorm(x);
            for &y in g.body().vertices() {
                let val = det2(y, x).abs();
                if val >= sup - 1e-12 {
                    assert!(g.is_birkhoff(y, x, &t).unwrap());
                } else if val <= sup * (1.0 - 1e-6) {
                    assert!(!g.is_birkhoff(y, x, &t).unwrap());
                }
            }
        }
    }
}
