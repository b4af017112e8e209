use thiserror::Error;

use super::arc::{angle_at_bend, make_arc_edge, ArcGeometry, Side};
use super::segment::Segment;
use crate::angle::AngleSpec;
use crate::Point;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcEdge {
    pub u: usize,
    pub v: usize,
    /// Halfplane of the directed chord `u → v` holding the arc.
    pub side: Side,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BendEdge {
    pub u: usize,
    pub v: usize,
    pub bend: Point,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    Arc(ArcEdge),
    Bend(BendEdge),
}

impl Edge {
    pub fn arc(u: usize, v: usize, side: Side) -> Edge {
        Edge::Arc(ArcEdge { u, v, side })
    }

    pub fn bend(u: usize, v: usize, bend: Point) -> Edge {
        Edge::Bend(BendEdge { u, v, bend })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        match self {
            Edge::Arc(a) => (a.u, a.v),
            Edge::Bend(b) => (b.u, b.v),
        }
    }

    /// Unordered vertex pair as `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        let (u, v) = self.endpoints();
        (u.min(v), u.max(v))
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Edge::Arc(_))
    }
}

/// One smooth piece of an edge. Endpoints that are drawing vertices carry
/// their index.
#[derive(Debug, Clone, Copy)]
pub enum Piece {
    Seg { seg: Segment<f64>, ends: [Option<usize>; 2] },
    Arc { geom: ArcGeometry<f64>, ends: [usize; 2] },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DrawingError {
    #[error("edge {edge} references vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, count: usize },
    #[error("vertices {0} and {1} coincide within tolerance")]
    DuplicateVertices(usize, usize),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("tolerance must be positive and finite")]
    BadTolerance,
}

/// A drawn multigraph whose edges are α-arcs or α-bends.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub alpha: AngleSpec,
    pub vertices: Vec<Point>,
    pub edges: Vec<Edge>,
    pub tolerance: f64,
}

impl Drawing {
    pub fn new(alpha: AngleSpec, vertices: Vec<Point>, edges: Vec<Edge>) -> Result<Self, DrawingError> {
        Self::with_tolerance(alpha, vertices, edges, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        alpha: AngleSpec,
        vertices: Vec<Point>,
        edges: Vec<Edge>,
        tolerance: f64,
    ) -> Result<Self, DrawingError> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(DrawingError::BadTolerance);
        }
        for (i, p) in vertices.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFinite(i));
            }
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i].dist(vertices[j]) <= tolerance {
                    return Err(DrawingError::DuplicateVertices(i, j));
                }
            }
        }
        for (k, e) in edges.iter().enumerate() {
            let (u, v) = e.endpoints();
            for w in [u, v] {
                if w >= vertices.len() {
                    return Err(DrawingError::VertexOutOfRange { edge: k, vertex: w, count: vertices.len() });
                }
            }
        }
        Ok(Drawing { alpha, vertices, edges, tolerance })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn alpha_radians(&self) -> f64 {
        self.alpha.radians()
    }

    /// Circle data of an arc edge.
    pub fn arc_geometry(&self, e: &ArcEdge) -> Option<ArcGeometry<f64>> {
        make_arc_edge(self.vertices[e.u], self.vertices[e.v], e.side, self.alpha_radians()).ok()
    }

    /// Smooth pieces of an edge; empty when the edge is degenerate.
    pub fn pieces(&self, e: &Edge) -> Vec<Piece> {
        match e {
            Edge::Arc(a) => match self.arc_geometry(a) {
                Some(geom) => vec![Piece::Arc { geom, ends: [a.u, a.v] }],
                None => Vec::new(),
            },
            Edge::Bend(b) => vec![
                Piece::Seg { seg: Segment::new(self.vertices[b.u], b.bend), ends: [Some(b.u), None] },
                Piece::Seg { seg: Segment::new(b.bend, self.vertices[b.v]), ends: [None, Some(b.v)] },
            ],
        }
    }

    /// Side of the edge relative to the chord directed from the smaller to the
    /// larger endpoint index.
    pub fn canonical_side(&self, e: &Edge) -> Option<Side> {
        let (u, v) = e.endpoints();
        let side = match e {
            Edge::Arc(a) => Some(a.side),
            Edge::Bend(b) => Side::of_point(self.vertices[u], self.vertices[v], b.bend, self.tolerance),
        }?;
        Some(if u <= v { side } else { side.flip() })
    }

    /// Geometric problems of a single edge, if any.
    pub fn edge_defect(&self, e: &Edge) -> Option<String> {
        let (u, v) = e.endpoints();
        let n = self.vertices.len();
        if u >= n || v >= n {
            return Some(format!("vertex index out of range (n = {n})"));
        }
        if u == v {
            return Some("self-loop".into());
        }
        let eps = self.tolerance;
        if let Edge::Bend(b) = e {
            for (w, p) in self.vertices.iter().enumerate() {
                if p.dist(b.bend) <= eps {
                    return Some(format!("bend point coincides with vertex {w}"));
                }
            }
            let angle = match angle_at_bend(self.vertices[u], b.bend, self.vertices[v]) {
                Ok(a) => a,
                Err(_) => return Some("degenerate bend".into()),
            };
            let want = self.alpha_radians();
            if (angle - want).abs() > eps.max(1e-9) {
                return Some(format!("bend angle {angle} differs from alpha {want}"));
            }
        }
        for (w, p) in self.vertices.iter().enumerate() {
            if w == u || w == v {
                continue;
            }
            let hit = self.pieces(e).iter().any(|piece| match piece {
                Piece::Seg { seg, .. } => seg.distance_to(*p) <= eps,
                Piece::Arc { geom, .. } => geom.contains(*p, eps),
            });
            if hit {
                return Some(format!("passes through vertex {w}"));
            }
        }
        None
    }

    /// Number of edges per unordered vertex pair.
    pub fn pair_multiplicities(&self) -> std::collections::BTreeMap<(usize, usize), Vec<usize>> {
        let mut m = std::collections::BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            m.entry(e.pair()).or_insert_with(Vec::new).push(i);
        }
        m
    }

    /// Rigid rotation about the origin, applied to vertices and bends.
    pub fn rotated(&self, theta: f64) -> Drawing {
        let mut d = self.clone();
        for p in &mut d.vertices {
            *p = p.rotated(theta);
        }
        for e in &mut d.edges {
            if let Edge::Bend(b) = e {
                b.bend = b.bend.rotated(theta);
            }
        }
        d
    }
}
