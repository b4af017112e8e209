//! Lower-bound constructions.

mod collinear;
mod diametric;
mod grid;
mod large_angle;
mod small_angle;
mod thresholds;

pub use collinear::{collinear_construction, CollinearStyle};
pub use diametric::diametric_construction;
pub use grid::grid_construction;
pub use large_angle::{large_angle_construction, large_angle_limit};
pub use small_angle::{canonical_rotation, small_angle_bend_construction};
pub use thresholds::{thresholds, Thresholds};

use thiserror::Error;

use crate::kernel::{bend_point_on_arc, perturb_overlaps, Drawing, DrawingError, Edge, PerturbError, PerturbOptions};
use crate::{AngleSpec, Point, Side};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("angle {alpha} outside the admissible range {range}")]
    AngleOutOfRange { alpha: AngleSpec, range: String },
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("all points are collinear")]
    Collinear,
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Perturb(#[from] PerturbError),
}

/// Isosceles α-bend edges for the given `(u, v, side)` triples, with overlaps
/// then removed.
pub(crate) fn midpoint_bends(
    alpha: AngleSpec,
    vertices: Vec<Point>,
    pairs: &[(usize, usize, Side)],
) -> Result<Drawing, ConstructError> {
    let a = alpha.radians();
    let edges = pairs
        .iter()
        .map(|&(u, v, side)| {
            let b = bend_point_on_arc(vertices[u], vertices[v], side, a, 0.5).expect("distinct endpoints");
            Edge::bend(u, v, b)
        })
        .collect();
    let d = Drawing::new(alpha, vertices, edges)?;
    Ok(perturb_overlaps(&d, &PerturbOptions::default())?)
}

pub(crate) fn out_of_range(alpha: AngleSpec, range: &str) -> ConstructError {
    ConstructError::AngleOutOfRange { alpha, range: range.into() }
}

/// Index of a collinear triple, if any, within a relative tolerance.
pub fn find_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (points[i], points[j], points[k]);
                let scale = (b - a).norm().max((c - a).norm()).max((c - b).norm());
                if (b - a).cross(c - a).abs() <= 1e-12 * scale * scale {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}
