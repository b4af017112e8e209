//! Plane multigraphs whose edges are fixed-angle one-bend polylines or
//! circular arcs.

pub mod acgraph;
pub mod angle;
pub mod angles;
pub mod construct;
pub mod io;
pub mod kernel;
pub mod scalar;
pub mod solve;
pub mod svg;
pub mod validate;

pub use angle::{AngleError, AngleSpec, PiRatio};
pub use kernel::{Drawing, Edge, Side};
pub use scalar::Scalar;

/// Planar point in double precision.
pub type Point = kernel::Point2<f64>;
/// Single-precision point, for callers that store geometry compactly.
pub type Point32 = kernel::Point2<f32>;
/// Segment in double precision.
pub type Segment = kernel::Segment<f64>;
