use thiserror::Error;

/// Errors reported by constructors and geometric operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("zero vector where a direction is required")]
    ZeroVector,
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("parameter {value} lies outside [0, 1]")]
    ParamOutOfRange { value: f64 },
    #[error("convexity failure: {0}")]
    NotConvex(String),
    #[error("vertex cycle is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("origin is not strictly interior to the polygon")]
    OriginNotInterior,
    #[error("generator arc must run from w = (0, 1) to v = (1, 0)")]
    EndpointMismatch,
    #[error("vertex {index} lies outside the unit parallelogram")]
    OutsideParallelogram { index: usize },
    #[error("point must lie strictly outside the body")]
    PointNotOutside,
    #[error("tolerances must be positive and samples >= 8")]
    InvalidTolerance,
    #[error("degenerate bisector chord")]
    DegenerateChord,
    #[error("internal geometric defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
