use std::collections::BTreeSet;

use super::thresholds::{delaunay_triangles, thresholds};
use super::{find_collinear_triple, out_of_range, ConstructError};
use crate::kernel::Drawing;
use crate::{AngleSpec, Edge, Point, Side};

/// Smallest angle at which the Delaunay arcs are pairwise noncrossing.
pub fn large_angle_limit(alpha1: f64) -> f64 {
    0.5 * (std::f64::consts::PI + alpha1)
}

/// One α-arc per Delaunay edge, or two on opposite sides when `multi`.
pub fn large_angle_construction(points: &[Point], alpha: AngleSpec, multi: bool) -> Result<Drawing, ConstructError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructError::TooFewPoints { need: 3, got: n });
    }
    if let Some((i, j, k)) = find_collinear_triple(points) {
        return Err(ConstructError::CollinearTriple(i, j, k));
    }
    // Two arcs leaving a corner of angle β into the same face stay apart iff
    // π − α ≤ β/2, so the bound is (π + α₁)/2 rather than α₁.
    let alpha1 = thresholds(points)?.alpha1.ok_or(ConstructError::Collinear)?;
    let limit = large_angle_limit(alpha1);
    if alpha.radians() < limit - 1e-12 {
        return Err(out_of_range(alpha, &format!("[{limit}, π)")));
    }
    let pairs: BTreeSet<(usize, usize)> = delaunay_triangles(points)
        .into_iter()
        .flat_map(|[a, b, c]| [(a, b), (b, c), (c, a)])
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut edges: Vec<Edge> = pairs.iter().map(|&(u, v)| Edge::arc(u, v, Side::Left)).collect();
    if multi {
        edges.extend(pairs.iter().map(|&(u, v)| Edge::arc(u, v, Side::Right)));
    }
    Ok(Drawing::new(alpha, points.to_vec(), edges)?)
}
