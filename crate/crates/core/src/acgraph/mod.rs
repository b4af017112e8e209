//! Drawings where every crossing happens at one fixed angle: validation, the
//! red multigraph, and the edge-density bounds.

pub mod bounds;
pub mod red;

use thiserror::Error;

use crate::angles::AnglesError;
use crate::kernel::{DrawingError, PerturbError};
use crate::validate::ValidationReport;
use crate::AngleSpec;

pub use bounds::{
    ac_upper_bound, applicable_cases, bounds_table, AcBound, AcCase, BoundRow, BoundValue, BoundsTable, Status, Variant,
};
pub use red::{
    extract_red_graph, select_red_subset, selection_ratio, validate_ac_drawing, AcCrossing, AcDrawing, AcEdge,
    AcReport, RedClass, RedEdge, RedGraph, RedSelection, SegRef, Tier,
};

#[derive(Debug, Error)]
pub enum AcError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("angle {0} is outside (0, pi/2]")]
    AngleRange(AngleSpec),
    #[error("drawing is not a valid fixed-angle-crossing drawing")]
    Invalid(Box<AcReport>),
    #[error("segment {0:?} has two first crossings at the same distance (with {1:?} and {2:?})")]
    Tie(SegRef, SegRef, SegRef),
    #[error("first segments of red edges {0} and {1} overlap")]
    FirstSegmentsOverlap(usize, usize),
    #[error(transparent)]
    Angles(#[from] AnglesError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Perturb(#[from] PerturbError),
    #[error("selected red edges do not form a plane multigraph")]
    NotPlane(Box<ValidationReport>),
    #[error("selection keeps {kept} of {total} red edges, below the ratio {num}/{den}")]
    Ratio { kept: usize, total: usize, num: usize, den: usize },
}
