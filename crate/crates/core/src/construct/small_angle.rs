use std::f64::consts::{FRAC_PI_2, PI};

use super::collinear::dense_pairs;
use super::{out_of_range, thresholds, ConstructError};
use crate::kernel::{perturb_overlaps, Drawing, PerturbOptions};
use crate::{AngleSpec, Edge, Point};

const SAME_X: f64 = 1e-12;

/// Rotation angle after which all x-coordinates are distinct: zero when they
/// already are, otherwise half the smallest positive angle at which two points
/// would share an x-coordinate.
pub fn canonical_rotation(points: &[Point]) -> f64 {
    let mut needed = false;
    let mut smallest = PI;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            let d = q - p;
            if d.norm() == 0.0 {
                continue;
            }
            let bad = (FRAC_PI_2 - d.angle()).rem_euclid(PI);
            if bad < SAME_X || PI - bad < SAME_X {
                needed = true;
            } else {
                smallest = smallest.min(bad);
            }
        }
    }
    if needed {
        smallest / 2.0
    } else {
        0.0
    }
}

/// Bend multigraph with `4n - 6` edges for small angles. The first `3n - 6`
/// edges form a simple α-bend graph.
pub fn small_angle_bend_construction(points: &[Point], alpha: AngleSpec) -> Result<Drawing, ConstructError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructError::TooFewPoints { need: 3, got: n });
    }
    let limit = thresholds(points)?.alpha0_bend;
    let a = alpha.radians();
    if a >= limit {
        return Err(out_of_range(alpha, &format!("(0, {limit})")));
    }
    let theta = canonical_rotation(points);
    let rotated: Vec<Point> = points.iter().map(|p| p.rotated(theta)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| rotated[i].x.total_cmp(&rotated[j].x));

    let (sin, cos) = (a / 2.0).sin_cos();
    let edges = dense_pairs(n, true)
        .into_iter()
        .map(|(i, j, side)| {
            let (u, v) = (order[i], order[j]);
            let s = side.sign() as f64;
            let (pu, pv) = (rotated[u], rotated[v]);
            let du = Point::new(sin, s * cos);
            let dv = Point::new(-sin, s * cos);
            let t = (pv - pu).cross(dv) / du.cross(dv);
            Edge::bend(u, v, (pu + du * t).rotated(-theta))
        })
        .collect();
    let d = Drawing::new(alpha, points.to_vec(), edges)?;
    Ok(perturb_overlaps(&d, &PerturbOptions::default())?)
}
