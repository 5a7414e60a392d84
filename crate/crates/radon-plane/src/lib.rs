//! Radon curves in Minkowski planes: construction from a convex generator
//! arc via the symplectic dual, gauge norms and antinorms, Birkhoff
//! orthogonality, and the angular-bisector characterization.
//!
//! The construction takes a convex arc from `w = (0, 1)` to `v = (1, 0)`
//! inside the unit parallelogram quadrant, dualizes it through the
//! determinant form into the second quadrant, and closes the union with its
//! reflection into a centrally symmetric convex curve. Taken as the unit
//! circle of a norm, such curves are exactly the ones whose Birkhoff
//! orthogonality is symmetric; the crate verifies that and the companion
//! characterizations (norm equals antinorm, circle and anticircle homothets,
//! constant Birkhoff rectangle area, coinciding Busemann and Glogovskii
//! bisectors).

pub mod bisector;
pub mod curve;
pub mod error;
pub mod fixtures;
pub mod gauge;
pub mod generator;
pub mod geom;
pub mod orthogonality;
pub mod poly;
pub mod tolerance;

pub use curve::{ArcKind, Attainment, Frame, RadonCurve};
pub use error::{Error, Result};
pub use gauge::{AntinormView, GaugeNorm};
pub use generator::{GeneratorArc, ProfileEntry, SupportProfile};
pub use geom::{classify_quadrant, det2, Quadrant, QuadrantSet, Vec2};
pub use poly::{is_convex_cyclic, CentrallySymmetricPolygon, Polyline};
pub use tolerance::Tolerance;
