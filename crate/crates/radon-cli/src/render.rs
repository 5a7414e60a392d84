//! Deterministic SVG output: fixed viewBox over the [-1.5, 1.5]^2 frame,
//! fixed stroke ordering and number formatting, so renders are
//! byte-comparable.

use std::fmt::Write as _;

use radon_plane::bisector::{bisector_construction, tangents_from};
use radon_plane::orthogonality::conjugate_diameters;
use radon_plane::{CentrallySymmetricPolygon, GaugeNorm, Tolerance, Vec2};

use crate::CliError;

const PALETTE: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];

pub struct RenderOptions {
    pub anticircle: bool,
    pub conjugate_parallelogram: bool,
    pub bisector_at: Option<Vec2>,
}

fn fmt_coord(x: f64) -> String {
    // Fixed precision keeps output byte-stable; rounding before the sign
    // check avoids "-0.000000" for tiny negatives.
    let r = (x * 1e6).round() / 1e6 + 0.0;
    format!("{:.6}", r)
}

fn path_from(points: &[Vec2], closed: bool) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{},{} ", fmt_coord(p.a), fmt_coord(-p.b));
    }
    if closed {
        d.push('Z');
    } else {
        d.pop();
    }
    d
}

struct Svg {
    out: String,
}

impl Svg {
    fn new() -> Svg {
        let mut out = String::new();
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.5 -1.5 3 3\">\n",
        );
        out.push_str("<g fill=\"none\" stroke-width=\"0.012\">\n");
        Svg { out }
    }

    fn path(&mut self, d: &str, stroke: &str, dashed: bool) {
        let dash = if dashed {
            " stroke-dasharray=\"0.05 0.04\""
        } else {
            ""
        };
        let _ = writeln!(self.out, "<path d=\"{d}\" stroke=\"{stroke}\"{dash}/>");
    }

    fn dot(&mut self, p: Vec2, fill: &str) {
        let _ = writeln!(
            self.out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"0.025\" fill=\"{fill}\" stroke=\"none\"/>",
            fmt_coord(p.a),
            fmt_coord(-p.b)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</g>\n</svg>\n");
        self.out
    }
}

pub fn render(
    bodies: &[CentrallySymmetricPolygon],
    opts: &RenderOptions,
    tol: &Tolerance,
) -> Result<String, CliError> {
    let mut svg = Svg::new();
    // Axes first; curves and overlays draw over them in input order.
    svg.path(
        &path_from(&[Vec2::new(-1.5, 0.0), Vec2::new(1.5, 0.0)], false),
        "#cccccc",
        false,
    );
    svg.path(
        &path_from(&[Vec2::new(0.0, -1.5), Vec2::new(0.0, 1.5)], false),
        "#cccccc",
        false,
    );
    for (i, body) in bodies.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        svg.path(&path_from(body.vertices(), true), color, false);
        if opts.anticircle {
            let anti = GaugeNorm::new(body.clone())
                .anticircle(tol)
                .map_err(|e| CliError::Input(e.to_string()))?;
            svg.path(&path_from(anti.vertices(), true), color, true);
        }
        if opts.conjugate_parallelogram {
            let (v, w) = conjugate_diameters(body);
            let corners = [v + w, w - v, -v - w, v - w];
            svg.path(&path_from(&corners, true), "#7f7f7f", true);
            svg.dot(v, "#7f7f7f");
            svg.dot(w, "#7f7f7f");
        }
        if let Some(p) = opts.bisector_at {
            let tp = tangents_from(body, p, tol).map_err(|e| CliError::Input(e.to_string()))?;
            let report =
                bisector_construction(body, p, tol).map_err(|e| CliError::Input(e.to_string()))?;
            svg.path(&path_from(&[p, tp.touch_r], false), "#ff7f0e", false);
            svg.path(&path_from(&[p, tp.touch_s], false), "#ff7f0e", false);
            svg.path(&path_from(&[report.x0, report.y0], false), "#17becf", false);
            svg.path(&path_from(&[report.x1, report.y1], false), "#17becf", false);
            for q in [report.x0, report.y0, report.x1, report.y1] {
                svg.dot(q, "#17becf");
            }
            svg.dot(p, "#ff7f0e");
        }
    }
    Ok(svg.finish())
}
