use serde::{Deserialize, Serialize};

use super::{midpoint_bends, ConstructError};
use crate::kernel::Drawing;
use crate::{AngleSpec, Edge, Point, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CollinearStyle {
    ArcSimple,
    ArcMulti,
    BendSimple,
    BendMulti,
}

impl CollinearStyle {
    pub fn is_multi(self) -> bool {
        matches!(self, CollinearStyle::ArcMulti | CollinearStyle::BendMulti)
    }

    pub fn is_arc(self) -> bool {
        matches!(self, CollinearStyle::ArcSimple | CollinearStyle::ArcMulti)
    }
}

const UP: Side = Side::Left;
const DOWN: Side = Side::Right;

/// Edges of the outerplanar pair construction on points sorted left to right,
/// as `(u, v, side)` with `u < v`; the simple graph comes first.
pub(crate) fn dense_pairs(n: usize, multi: bool) -> Vec<(usize, usize, Side)> {
    let mut out: Vec<_> = (0..n - 1).map(|i| (i, i + 1, UP)).collect();
    out.extend((2..n).map(|j| (0, j, UP)));
    out.extend((1..n - 2).map(|j| (j, n - 1, DOWN)));
    if multi {
        out.extend((0..n - 1).map(|i| (i, i + 1, DOWN)));
        out.push((0, n - 1, DOWN));
    }
    out
}

/// Two stars, from the leftmost point above and into the rightmost point
/// below.
pub(crate) fn star_pairs(n: usize, multi: bool) -> Vec<(usize, usize, Side)> {
    let mut out: Vec<_> = (1..n).map(|i| (0, i, UP)).collect();
    out.extend((1..n - 1).map(|j| (j, n - 1, DOWN)));
    if multi {
        out.push((0, n - 1, DOWN));
    }
    out
}

pub fn collinear_construction(n: usize, alpha: AngleSpec, style: CollinearStyle) -> Result<Drawing, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooFewPoints { need: 3, got: n });
    }
    let vertices: Vec<Point> = (0..n).map(|i| Point::new(i as f64, 0.0)).collect();
    let wide = alpha.cmp_frac_pi(1, 2).is_ge();
    if style.is_arc() {
        let pairs = if wide { dense_pairs(n, style.is_multi()) } else { star_pairs(n, style.is_multi()) };
        let edges = pairs.into_iter().map(|(u, v, s)| Edge::arc(u, v, s)).collect();
        return Ok(Drawing::new(alpha, vertices, edges)?);
    }
    midpoint_bends(alpha, vertices, &dense_pairs(n, style.is_multi()))
}
