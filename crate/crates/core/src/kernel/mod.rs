//! Geometric kernel: fixed-angle arcs and bends, crossing predicates and
//! overlap removal.

pub mod arc;
pub mod cross;
pub mod drawing;
pub mod perturb;
pub mod point;
pub mod segment;

use thiserror::Error;

pub use arc::{angle_at_bend, bend_point_on_arc, bend_with_start_angle, make_arc_edge, ArcGeometry, Side};
pub use cross::{edges_cross, pieces_cross, CrossKind, CrossResult};
pub use drawing::{ArcEdge, BendEdge, Drawing, DrawingError, Edge, Piece, DEFAULT_TOLERANCE};
pub use perturb::{perturb_layers, perturb_overlaps, PerturbError, PerturbOptions};
pub use point::Point2;
pub use segment::{crossing_angle, Segment};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KernelError {
    #[error("edge endpoints coincide")]
    CoincidentEndpoints,
    #[error("arc parameter {0} outside (0, 1)")]
    ParameterOutOfRange(f64),
    #[error("bend point coincides with an endpoint")]
    DegenerateBend,
    #[error("segments do not cross")]
    NotCrossing,
}
