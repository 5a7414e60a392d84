//! Shared oracles for the integration suites.

use radon_plane::geom::Vec2;
use radon_plane::GaugeNorm;

/// Grid minimization of `t -> norm(x + t y)` over `[-10, 10]`, refined by
/// bracketing (the map is convex, so the coarse argmin brackets the true
/// minimizer within one step on each side).
pub fn grid_min_norm(g: &GaugeNorm, x: Vec2, y: Vec2, steps: usize) -> f64 {
    let mut lo = -10.0f64;
    let mut hi = 10.0f64;
    let mut count = steps;
    let mut best = f64::INFINITY;
    for _round in 0..3 {
        let mut best_k = 0usize;
        for k in 0..=count {
            let t = lo + (hi - lo) * k as f64 / count as f64;
            let val = g.norm(x + y * t);
            if val < best {
                best = val;
                best_k = k;
            }
        }
        let step = (hi - lo) / count as f64;
        let center = lo + step * best_k as f64;
        lo = center - step;
        hi = center + step;
        count = 1000;
    }
    best
}

/// Oracle verdict for Birkhoff orthogonality from the refined grid minimum:
/// `Some(true)` when the norm is minimal at `t = 0`, `Some(false)` when the
/// grid resolves a genuine dip, `None` when the dip is below resolution.
pub fn birkhoff_grid_verdict(g: &GaugeNorm, x: Vec2, y: Vec2, steps: usize) -> Option<bool> {
    let nx = g.norm(x);
    let min = grid_min_norm(g, x, y, steps);
    let band = 1e-9 * nx.max(1.0);
    if min >= nx - band {
        Some(true)
    } else if min < nx - 10.0 * band {
        Some(false)
    } else {
        None
    }
}
