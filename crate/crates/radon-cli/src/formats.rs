//! File formats: arc specifications, curve/body files, and reports.
//!
//! The curve file is JSON with frame, vertex list, and optional piece
//! metadata; coordinates are frame coefficients. A versioned `format` field
//! guards evolution.

use serde::{Deserialize, Serialize};

use radon_plane::{CentrallySymmetricPolygon, Frame, GeneratorArc, RadonCurve, Tolerance, Vec2};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// Arc specification accepted by `construct`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ArcSpec {
    Explicit { vertices: Vec<[f64; 2]> },
    Segment,
    Square,
    CircleArc { resolution: Option<usize> },
    LpArc { p: f64, resolution: Option<usize> },
}

impl ArcSpec {
    pub fn build(&self, tol: &Tolerance) -> Result<GeneratorArc, CliError> {
        use radon_plane::fixtures;
        let arc = match self {
            ArcSpec::Explicit { vertices } => {
                let verts = vertices
                    .iter()
                    .map(|&[a, b]| Vec2::try_new(a, b))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::Input(e.to_string()))?;
                GeneratorArc::new(verts, tol).map_err(|e| CliError::Input(e.to_string()))?
            }
            ArcSpec::Segment => fixtures::segment_arc(tol),
            ArcSpec::Square => fixtures::square_arc(tol),
            ArcSpec::CircleArc { resolution } => {
                let n = resolution.unwrap_or(64);
                if n < 2 {
                    return Err(CliError::Input("resolution must be at least 2".into()));
                }
                fixtures::circle_arc(n, tol).map_err(|e| CliError::Input(e.to_string()))?
            }
            ArcSpec::LpArc { p, resolution } => {
                let n = resolution.unwrap_or(64);
                if !(p.is_finite() && *p > 1.0) {
                    return Err(CliError::Input("lp-arc requires p > 1".into()));
                }
                if n < 2 {
                    return Err(CliError::Input("resolution must be at least 2".into()));
                }
                fixtures::lp_arc(*p, n, tol).map_err(|e| CliError::Input(e.to_string()))?
            }
        };
        Ok(arc)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameJson {
    pub v: [f64; 2],
    pub w: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveMeta {
    pub arc1_range: [usize; 2],
    pub arc2_range: [usize; 2],
}

/// Curve or body file. `meta` identifies the generator and dual pieces of a
/// constructed curve; plain bodies leave it out.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveFile {
    pub format: u32,
    pub frame: FrameJson,
    pub vertices: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<CurveMeta>,
}

impl CurveFile {
    pub fn from_curve(curve: &RadonCurve) -> CurveFile {
        let frame = curve.frame();
        CurveFile {
            format: FORMAT_VERSION,
            frame: FrameJson {
                v: [frame.v.a, frame.v.b],
                w: [frame.w.a, frame.w.b],
            },
            vertices: curve
                .polygon()
                .vertices()
                .iter()
                .map(|p| [p.a, p.b])
                .collect(),
            meta: Some(CurveMeta {
                arc1_range: [curve.generator_range().start, curve.generator_range().end],
                arc2_range: [curve.dual_range().start, curve.dual_range().end],
            }),
        }
    }

    pub fn validate_header(&self) -> Result<(), CliError> {
        if self.format != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported format version {}",
                self.format
            )));
        }
        let det = self.frame.v[0] * self.frame.w[1] - self.frame.v[1] * self.frame.w[0];
        if (det - 1.0).abs() > 1e-9 {
            return Err(CliError::Input(
                "frame determinant must be 1 (normalized conjugate basis)".into(),
            ));
        }
        Ok(())
    }

    pub fn vertex_list(&self) -> Result<Vec<Vec2>, CliError> {
        self.vertices
            .iter()
            .map(|&[a, b]| Vec2::try_new(a, b).map_err(|e| CliError::Input(e.to_string())))
            .collect()
    }

    /// Rebuilds the curve when piece metadata is present.
    pub fn to_curve(&self, tol: &Tolerance) -> Result<Option<RadonCurve>, CliError> {
        let Some(meta) = &self.meta else {
            return Ok(None);
        };
        let verts = self.vertex_list()?;
        let curve = RadonCurve::from_parts(
            verts,
            meta.arc1_range[0]..meta.arc1_range[1],
            meta.arc2_range[0]..meta.arc2_range[1],
            Frame::standard(),
            tol,
        )
        .map_err(|e| CliError::Input(e.to_string()))?;
        Ok(Some(curve))
    }

    pub fn to_body(&self, tol: &Tolerance) -> Result<CentrallySymmetricPolygon, CliError> {
        let verts = self.vertex_list()?;
        CentrallySymmetricPolygon::new(verts, tol).map_err(|e| CliError::Input(e.to_string()))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Per-check record of a verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub value: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub format: u32,
    pub input: String,
    pub eps_geom: f64,
    pub eps_norm: f64,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
