use serde::Serialize;
use spade::{DelaunayTriangulation, HasPosition, Triangulation};

use super::small_angle::canonical_rotation;
use super::ConstructError;
use crate::Point;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    /// Smallest angle between the vertical and a segment joining x-consecutive
    /// points, after the canonical rotation.
    pub alpha0_bend: f64,
    /// π minus the smallest Delaunay angle; `None` for collinear input.
    pub alpha1: Option<f64>,
    /// Largest angle between two segments spanned by the points that share an
    /// endpoint; `None` for collinear input.
    pub alpha2: Option<f64>,
}

struct Site {
    pos: spade::Point2<f64>,
    index: usize,
}

impl HasPosition for Site {
    type Scalar = f64;

    fn position(&self) -> spade::Point2<f64> {
        self.pos
    }
}

/// Delaunay triangles as index triples. Empty when the points are collinear.
pub(crate) fn delaunay_triangles(points: &[Point]) -> Vec<[usize; 3]> {
    let sites = points.iter().enumerate().map(|(index, p)| Site { pos: spade::Point2::new(p.x, p.y), index }).collect();
    let Ok(t) = DelaunayTriangulation::<Site>::bulk_load_stable(sites) else {
        return Vec::new();
    };
    t.inner_faces().map(|f| f.vertices().map(|v| v.data().index)).collect()
}

/// Interior angle of triangle `abc` at `a`.
pub(crate) fn corner_angle(a: Point, b: Point, c: Point) -> f64 {
    let (u, v) = (b - a, c - a);
    u.cross(v).abs().atan2(u.dot(v))
}

pub fn thresholds(points: &[Point]) -> Result<Thresholds, ConstructError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructError::TooFewPoints { need: 3, got: n });
    }
    let theta = canonical_rotation(points);
    let mut rotated: Vec<Point> = points.iter().map(|p| p.rotated(theta)).collect();
    rotated.sort_by(|a, b| a.x.total_cmp(&b.x));
    let alpha0_bend = rotated
        .windows(2)
        .map(|w| {
            let d = w[1] - w[0];
            d.x.abs().atan2(d.y.abs())
        })
        .fold(f64::INFINITY, f64::min);

    let tris = delaunay_triangles(points);
    let alpha1 = (!tris.is_empty()).then(|| {
        let beta = tris
            .iter()
            .flat_map(|&[a, b, c]| {
                let (a, b, c) = (points[a], points[b], points[c]);
                [corner_angle(a, b, c), corner_angle(b, c, a), corner_angle(c, a, b)]
            })
            .fold(f64::INFINITY, f64::min);
        std::f64::consts::PI - beta
    });
    let alpha2 = alpha1.map(|_| {
        let mut best: f64 = 0.0;
        for p in 0..n {
            for q in 0..n {
                for r in q + 1..n {
                    if p != q && p != r {
                        best = best.max(corner_angle(points[p], points[q], points[r]));
                    }
                }
            }
        }
        best
    });
    Ok(Thresholds { alpha0_bend, alpha1, alpha2 })
}
