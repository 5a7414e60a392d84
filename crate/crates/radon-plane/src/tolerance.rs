use crate::error::{Error, Result};

/// Shared tolerance policy.
///
/// All geometric predicates use the absolute slack `eps_geom`; curves are
/// normalized to live in the unit parallelogram, so an absolute tolerance is
/// meaningful. Norm-level comparisons use `eps_norm`, and `samples` is the
/// default grid resolution for sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_geom: f64,
    pub eps_norm: f64,
    pub samples: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_geom: 1e-9,
            eps_norm: 1e-9,
            samples: 1024,
        }
    }
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_norm: f64, samples: usize) -> Result<Self> {
        if eps_geom > 0.0 && eps_norm > 0.0 && samples >= 8 {
            Ok(Tolerance {
                eps_geom,
                eps_norm,
                samples,
            })
        } else {
            Err(Error::InvalidTolerance)
        }
    }
}
