//! Pairwise crossing predicate for drawn edges.
//!
//! Two edges cross when their curves share a point that is not a vertex of
//! the drawing. Intersections within tolerance of a vertex count as being at
//! that vertex. A common sub-curve of positive length is an overlap.

use serde::Serialize;

use super::arc::ArcGeometry;
use super::drawing::{Drawing, Edge, Piece};
use super::segment::{
    circle_circle, reflect_across, second_line_circle_point, segment_circle, segment_segment, CircleMeet, Meet, Segment,
};
use crate::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossKind {
    None,
    Cross,
    Overlap,
    SharedVertexOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossResult {
    pub kind: CrossKind,
    /// A non-vertex common point; present iff `kind == Cross`.
    pub witness: Option<Point>,
}

impl CrossResult {
    pub fn conflicts(&self) -> bool {
        matches!(self.kind, CrossKind::Cross | CrossKind::Overlap)
    }
}

pub fn edges_cross(e1: &Edge, e2: &Edge, drawing: &Drawing) -> CrossResult {
    pieces_cross(&drawing.pieces(e1), &drawing.pieces(e2), &drawing.vertices, drawing.tolerance)
}

/// Crossing classification for two curves given as piece lists.
pub fn pieces_cross(p1: &[Piece], p2: &[Piece], vertices: &[Point], eps: f64) -> CrossResult {
    let mut points = Vec::new();
    for a in p1 {
        for b in p2 {
            match piece_meet(a, b, eps) {
                Meet::Overlap(_) => return CrossResult { kind: CrossKind::Overlap, witness: None },
                Meet::Points(p) => points.extend(p),
            }
        }
    }
    let off_vertex = points.iter().copied().find(|p| vertices.iter().all(|v| v.dist(*p) > eps));
    match off_vertex {
        Some(w) => CrossResult { kind: CrossKind::Cross, witness: Some(w) },
        None if points.is_empty() => CrossResult { kind: CrossKind::None, witness: None },
        None => CrossResult { kind: CrossKind::SharedVertexOnly, witness: None },
    }
}

fn shared_vertex(a: &[Option<usize>; 2], b: &[Option<usize>; 2]) -> Option<usize> {
    a.iter().flatten().find(|x| b.iter().flatten().any(|y| y == *x)).copied()
}

fn ends_of(p: &Piece) -> [Option<usize>; 2] {
    match p {
        Piece::Seg { ends, .. } => *ends,
        Piece::Arc { ends, .. } => [Some(ends[0]), Some(ends[1])],
    }
}

fn vertex_point(p: &Piece, w: usize) -> Point {
    match p {
        Piece::Seg { seg, ends } => {
            if ends[0] == Some(w) {
                seg.a
            } else {
                seg.b
            }
        }
        Piece::Arc { geom, ends } => {
            if ends[0] == w {
                geom.start
            } else {
                geom.end
            }
        }
    }
}

pub(crate) fn piece_meet(a: &Piece, b: &Piece, eps: f64) -> Meet<f64> {
    let shared = shared_vertex(&ends_of(a), &ends_of(b));
    match (a, b) {
        (Piece::Seg { seg: s1, .. }, Piece::Seg { seg: s2, .. }) => match (segment_segment(s1, s2, eps), shared) {
            (Meet::Points(_), Some(w)) => Meet::Points(vec![vertex_point(a, w)]),
            (meet, _) => meet,
        },
        (Piece::Seg { seg, .. }, Piece::Arc { geom, .. }) | (Piece::Arc { geom, .. }, Piece::Seg { seg, .. }) => {
            match shared {
                Some(w) => {
                    let wp = vertex_point(a, w);
                    let other_end = if seg.a.dist(wp) <= seg.b.dist(wp) { seg.b } else { seg.a };
                    let q = second_line_circle_point(wp, other_end - wp, geom.center);
                    let mut pts = vec![wp];
                    if seg.distance_to(q) <= eps && geom.contains(q, eps) {
                        pts.push(q);
                    }
                    Meet::Points(pts)
                }
                None => Meet::Points(
                    segment_circle(seg, geom.center, geom.radius, eps)
                        .into_iter()
                        .filter(|p| geom.contains(*p, eps))
                        .collect(),
                ),
            }
        }
        (Piece::Arc { geom: g1, .. }, Piece::Arc { geom: g2, .. }) => {
            arc_arc(g1, g2, shared.map(|w| vertex_point(a, w)), eps)
        }
    }
}

fn arc_arc(g1: &ArcGeometry<f64>, g2: &ArcGeometry<f64>, shared: Option<Point>, eps: f64) -> Meet<f64> {
    match circle_circle(g1.center, g1.radius, g2.center, g2.radius, eps) {
        CircleMeet::Same => same_circle(g1, g2, eps),
        CircleMeet::Points(generic) => {
            let candidates = match shared {
                Some(w) => vec![w, reflect_across(w, g1.center, g2.center)],
                None => generic,
            };
            let mut pts: Vec<Point> = Vec::new();
            for p in candidates {
                if g1.contains(p, eps) && g2.contains(p, eps) && pts.iter().all(|q| q.dist(p) > eps) {
                    pts.push(p);
                }
            }
            Meet::Points(pts)
        }
    }
}

/// Counterclockwise angular interval `[lo, lo + len]` covered by an arc.
fn ccw_interval(g: &ArcGeometry<f64>) -> (f64, f64) {
    if g.sweep < 0.0 {
        (g.start_angle + g.sweep, -g.sweep)
    } else {
        (g.start_angle, g.sweep)
    }
}

fn same_circle(g1: &ArcGeometry<f64>, g2: &ArcGeometry<f64>, eps: f64) -> Meet<f64> {
    let (lo1, len1) = ccw_interval(g1);
    let (lo2, len2) = ccw_interval(g2);
    let tau = std::f64::consts::TAU;
    let mut best = f64::NEG_INFINITY;
    let mut best_mid = 0.0;
    for k in -2..=2 {
        let s = lo2 + tau * k as f64;
        let lo = lo1.max(s);
        let hi = (lo1 + len1).min(s + len2);
        if hi - lo > best {
            best = hi - lo;
            best_mid = 0.5 * (lo + hi);
        }
    }
    if best * g1.radius > eps {
        let p = g1.center + Point::from_angle(best_mid) * g1.radius;
        return Meet::Overlap(p);
    }
    let mut pts: Vec<Point> = Vec::new();
    for p in [g1.start, g1.end] {
        if g2.contains(p, eps) {
            pts.push(p);
        }
    }
    for p in [g2.start, g2.end] {
        if g1.contains(p, eps) && pts.iter().all(|q| q.dist(p) > eps) {
            pts.push(p);
        }
    }
    Meet::Points(pts)
}

/// Segment pieces of a bend edge, for callers that need raw segments.
pub fn bend_segments(drawing: &Drawing, e: &Edge) -> Option<[Segment<f64>; 2]> {
    match e {
        Edge::Bend(b) => {
            Some([Segment::new(drawing.vertices[b.u], b.bend), Segment::new(b.bend, drawing.vertices[b.v])])
        }
        Edge::Arc(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::arc::{bend_point_on_arc, Side};
    use crate::AngleSpec;

    fn collinear(n: usize, alpha: AngleSpec, edges: Vec<Edge>) -> Drawing {
        let v = (0..n).map(|i| Point::new(i as f64, 0.0)).collect();
        Drawing::new(alpha, v, edges).unwrap()
    }

    #[test]
    fn opposite_arcs_share_only_vertices() {
        let d = collinear(2, AngleSpec::frac_pi(1, 3), vec![Edge::arc(0, 1, Side::Left), Edge::arc(0, 1, Side::Right)]);
        let r = edges_cross(&d.edges[0], &d.edges[1], &d);
        assert_eq!(r.kind, CrossKind::SharedVertexOnly);
        assert!(r.witness.is_none());
    }

    #[test]
    fn small_angle_adjacent_upper_arcs_cross() {
        let d = collinear(3, AngleSpec::frac_pi(1, 3), vec![Edge::arc(0, 1, Side::Left), Edge::arc(1, 2, Side::Left)]);
        let r = edges_cross(&d.edges[0], &d.edges[1], &d);
        assert_eq!(r.kind, CrossKind::Cross);
        assert!(r.witness.unwrap().y > 0.0);
        assert_eq!(edges_cross(&d.edges[1], &d.edges[0], &d).kind, CrossKind::Cross);
    }

    #[test]
    fn large_angle_adjacent_and_nested_arcs_touch() {
        for alpha in [AngleSpec::frac_pi(1, 2), AngleSpec::frac_pi(2, 3)] {
            let d = collinear(
                3,
                alpha,
                vec![Edge::arc(0, 1, Side::Left), Edge::arc(1, 2, Side::Left), Edge::arc(0, 2, Side::Left)],
            );
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                assert_eq!(edges_cross(&d.edges[i], &d.edges[j], &d).kind, CrossKind::SharedVertexOnly);
            }
        }
    }

    #[test]
    fn bends_on_same_arc_cross() {
        let a = Point::new(0.0, 0.0);
        let c = Point::new(3.0, 0.5);
        let alpha = 1.2;
        let b1 = bend_point_on_arc(a, c, Side::Left, alpha, 0.3).unwrap();
        let b2 = bend_point_on_arc(a, c, Side::Left, alpha, 0.6).unwrap();
        let d = Drawing::new(
            AngleSpec::Irrational { radians: alpha },
            vec![a, c],
            vec![Edge::bend(0, 1, b1), Edge::bend(0, 1, b2)],
        )
        .unwrap();
        assert_eq!(edges_cross(&d.edges[0], &d.edges[1], &d).kind, CrossKind::Cross);
    }

    #[test]
    fn self_pair_is_never_a_crossing() {
        let d = collinear(
            2,
            AngleSpec::frac_pi(1, 2),
            vec![Edge::arc(0, 1, Side::Left), Edge::bend(0, 1, Point::new(0.5, 0.5))],
        );
        for e in &d.edges {
            assert_ne!(edges_cross(e, e, &d).kind, CrossKind::Cross);
        }
    }

    #[test]
    fn collinear_bend_prefixes_overlap() {
        let alpha = AngleSpec::frac_pi(1, 3);
        let a = alpha.radians();
        let p = |i: f64| Point::new(i, 0.0);
        let b01 = bend_point_on_arc(p(0.0), p(1.0), Side::Left, a, 0.5).unwrap();
        let b02 = bend_point_on_arc(p(0.0), p(2.0), Side::Left, a, 0.5).unwrap();
        let d = collinear(3, alpha, vec![Edge::bend(0, 1, b01), Edge::bend(0, 2, b02)]);
        assert_eq!(edges_cross(&d.edges[0], &d.edges[1], &d).kind, CrossKind::Overlap);
    }
}
