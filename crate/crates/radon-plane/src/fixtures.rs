//! Deterministic generator arcs and unit balls used across tests, the
//! verification sweeps, and the command line.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generator::GeneratorArc;
use crate::geom::{det2, Vec2};
use crate::poly::CentrallySymmetricPolygon;
use crate::tolerance::Tolerance;

/// Portable seeded RNG for reproducible sweeps.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The straight chord from w to v; assembles to the affine-regular hexagon.
pub fn segment_arc(tol: &Tolerance) -> GeneratorArc {
    GeneratorArc::new(vec![Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)], tol)
        .expect("segment arc is valid")
}

/// The corner path through v + w; assembles to the mixed square/chord curve.
pub fn square_arc(tol: &Tolerance) -> GeneratorArc {
    GeneratorArc::new(
        vec![
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
        ],
        tol,
    )
    .expect("square arc is valid")
}

/// Quarter of the Euclidean unit circle sampled at `n >= 2` vertices.
pub fn circle_arc(n: usize, tol: &Tolerance) -> Result<GeneratorArc> {
    GeneratorArc::new(quarter_circle_points(n), tol)
}

fn quarter_circle_points(n: usize) -> Vec<Vec2> {
    assert!(n >= 2);
    let mut verts = Vec::with_capacity(n);
    verts.push(Vec2::new(0.0, 1.0));
    for i in 1..n - 1 {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / (n - 1) as f64;
        verts.push(Vec2::new(theta.sin(), theta.cos()));
    }
    verts.push(Vec2::new(1.0, 0.0));
    verts
}

/// Quarter of the l_p unit sphere (`p > 1`) sampled at `n >= 2` vertices.
pub fn lp_arc(p: f64, n: usize, tol: &Tolerance) -> Result<GeneratorArc> {
    GeneratorArc::new(quarter_lp_points(p, n), tol)
}

fn quarter_lp_points(p: f64, n: usize) -> Vec<Vec2> {
    assert!(p > 1.0 && n >= 2);
    let e = 2.0 / p;
    let mut verts = Vec::with_capacity(n);
    verts.push(Vec2::new(0.0, 1.0));
    for i in 1..n - 1 {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / (n - 1) as f64;
        verts.push(Vec2::new(theta.sin().powf(e), theta.cos().powf(e)));
    }
    verts.push(Vec2::new(1.0, 0.0));
    verts
}

/// Seeded random generator arc: the convex hull of points thrown into the
/// admissible triangle, walked from w to v. Resamples until the vertex count
/// lands in `[min_vertices, max_vertices]`.
pub fn random_arc<R: Rng>(
    rng: &mut R,
    min_vertices: usize,
    max_vertices: usize,
    tol: &Tolerance,
) -> GeneratorArc {
    assert!(min_vertices >= 2 && max_vertices >= min_vertices);
    loop {
        let count = rng.gen_range(min_vertices..=max_vertices.max(3)) + 4;
        let mut pts: Vec<Vec2> = Vec::with_capacity(count + 3);
        pts.push(Vec2::ZERO);
        pts.push(Vec2::new(1.0, 0.0));
        pts.push(Vec2::new(0.0, 1.0));
        for _ in 0..count {
            let mut a: f64 = rng.gen_range(0.0..1.0);
            let mut b: f64 = rng.gen_range(0.0..1.0);
            if a + b < 1.0 {
                // Reflect into the admissible triangle a + b >= 1.
                a = 1.0 - a;
                b = 1.0 - b;
            }
            pts.push(Vec2::new(a, b));
        }
        let hull = convex_hull(&mut pts);
        let arc = hull_to_arc(&hull);
        if arc.len() < min_vertices || arc.len() > max_vertices {
            continue;
        }
        match GeneratorArc::new(arc, tol) {
            Ok(arc) => return arc,
            Err(_) => continue,
        }
    }
}

/// Andrew's monotone chain; returns the hull counterclockwise with strict
/// turns (collinear points dropped).
fn convex_hull(pts: &mut Vec<Vec2>) -> Vec<Vec2> {
    pts.sort_by(|p, q| {
        p.a.partial_cmp(&q.a)
            .unwrap()
            .then(p.b.partial_cmp(&q.b).unwrap())
    });
    pts.dedup_by(|p, q| (*p - *q).is_zero(1e-12));
    let n = pts.len();
    let mut hull: Vec<Vec2> = Vec::with_capacity(2 * n);
    for &p in pts.iter() {
        while hull.len() >= 2
            && det2(
                hull[hull.len() - 1] - hull[hull.len() - 2],
                p - hull[hull.len() - 1],
            ) <= 1e-12
        {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len
            && det2(
                hull[hull.len() - 1] - hull[hull.len() - 2],
                p - hull[hull.len() - 1],
            ) <= 1e-12
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Extracts the w-to-v arc from a counterclockwise hull containing the
/// origin as a vertex: rotate the origin to the front, drop it, reverse.
fn hull_to_arc(hull: &[Vec2]) -> Vec<Vec2> {
    let o = hull
        .iter()
        .position(|&p| p.is_zero(1e-12))
        .expect("origin is a hull vertex");
    let mut arc: Vec<Vec2> = hull[o + 1..]
        .iter()
        .chain(hull[..o].iter())
        .copied()
        .collect();
    arc.reverse();
    arc
}

/// The affine-regular hexagon with vertices `{v, w, w - v}` and reflections;
/// the classical Radon polygon.
pub fn hexagon(tol: &Tolerance) -> CentrallySymmetricPolygon {
    CentrallySymmetricPolygon::new(
        vec![
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, 0.0),
            Vec2::new(0.0, -1.0),
            Vec2::new(1.0, -1.0),
        ],
        tol,
    )
    .expect("hexagon is valid")
}

/// The l_inf unit ball; the canonical non-Radon control.
pub fn unit_square(tol: &Tolerance) -> CentrallySymmetricPolygon {
    CentrallySymmetricPolygon::new(
        vec![
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
        ],
        tol,
    )
    .expect("square is valid")
}

/// The l_1 unit ball.
pub fn diamond(tol: &Tolerance) -> CentrallySymmetricPolygon {
    CentrallySymmetricPolygon::new(
        vec![
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(-1.0, 0.0),
            Vec2::new(0.0, -1.0),
        ],
        tol,
    )
    .expect("diamond is valid")
}

/// Inscribed Euclidean regular polygon with `n` vertices (`n` a multiple of
/// four so the axes are vertices).
pub fn euclidean_ngon(n: usize, tol: &Tolerance) -> Result<CentrallySymmetricPolygon> {
    assert!(n >= 4 && n.is_multiple_of(4), "vertex count must be a multiple of 4");
    let quarter = quarter_circle_points(n / 4 + 1);
    mirror_quarter(quarter, tol)
}

/// Polygonal l_p unit ball (`p > 1`) with `n` vertices, `n` a multiple of 4.
pub fn lp_ball(p: f64, n: usize, tol: &Tolerance) -> Result<CentrallySymmetricPolygon> {
    assert!(n >= 4 && n.is_multiple_of(4), "vertex count must be a multiple of 4");
    let quarter = quarter_lp_points(p, n / 4 + 1);
    mirror_quarter(quarter, tol)
}

/// Body scaled about the origin; scaling by a diagonal map keeps central
/// symmetry and convexity.
pub fn scaled(
    body: &CentrallySymmetricPolygon,
    sa: f64,
    sb: f64,
    tol: &Tolerance,
) -> Result<CentrallySymmetricPolygon> {
    let verts = body
        .vertices()
        .iter()
        .map(|&v| Vec2::new(v.a * sa, v.b * sb))
        .collect();
    CentrallySymmetricPolygon::new(verts, tol)
}

/// Mirrors a w-to-v quarter arc into a full centrally symmetric cycle.
fn mirror_quarter(
    quarter: Vec<Vec2>,
    tol: &Tolerance,
) -> Result<CentrallySymmetricPolygon> {
    // Counterclockwise: v to w (reversed quarter), then w to -v (mirror in
    // the b-axis), then the reflections of both.
    let mut half: Vec<Vec2> = quarter.iter().rev().copied().collect();
    for &p in &quarter[1..] {
        half.push(Vec2::new(-p.a, p.b));
    }
    let mut cycle = half.clone();
    for &p in &half[1..half.len() - 1] {
        cycle.push(-p);
    }
    CentrallySymmetricPolygon::new(cycle, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn euclidean_ngon_has_requested_size() {
        let body = euclidean_ngon(256, &tol()).unwrap();
        assert_eq!(body.len(), 256);
        for &p in body.vertices() {
            assert!((p.len2() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn lp_ball_is_valid_for_fractional_p() {
        for p in [1.5, 3.0, 4.0] {
            let body = lp_ball(p, 256, &tol()).unwrap();
            assert_eq!(body.len(), 256);
            for &q in body.vertices() {
                let val = q.a.abs().powf(p) + q.b.abs().powf(p);
                assert!((val - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn random_arcs_are_valid_and_sized() {
        let mut rng = seeded_rng(3);
        for _ in 0..20 {
            let arc = random_arc(&mut rng, 5, 50, &tol());
            assert!(arc.len() >= 5 && arc.len() <= 50, "len {}", arc.len());
            assert_eq!(arc.vertices()[0], Vec2::new(0.0, 1.0));
            assert_eq!(arc.vertices()[arc.len() - 1], Vec2::new(1.0, 0.0));
        }
    }

    #[test]
    fn random_arcs_are_reproducible() {
        let a: Vec<_> = {
            let mut rng = seeded_rng(42);
            random_arc(&mut rng, 5, 50, &tol()).vertices().to_vec()
        };
        let b: Vec<_> = {
            let mut rng = seeded_rng(42);
            random_arc(&mut rng, 5, 50, &tol()).vertices().to_vec()
        };
        assert_eq!(a, b);
    }
}
