//! JSON documents: drawings, point sets, segment sets and fixed-angle-crossing
//! drawings. Output is compact JSON with shortest round-trip numbers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acgraph::{AcDrawing, AcEdge};
use crate::angles::SegmentSet;
use crate::kernel::{Drawing, DrawingError, Edge, DEFAULT_TOLERANCE};
use crate::{AngleSpec, Point, Segment, Side};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Malformed(serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(serde_json::Error),
    #[error("invalid drawing: {0}")]
    Invariant(#[from] DrawingError),
    #[error("invalid document: {0}")]
    Document(String),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        match e.classify() {
            serde_json::error::Category::Data => IoError::Schema(e),
            _ => IoError::Malformed(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum SideDoc {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum EdgeDoc {
    Arc { u: usize, v: usize, side: SideDoc },
    Bend { u: usize, v: usize, bend: [f64; 2] },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    alpha: AngleSpec,
    vertices: Vec<[f64; 2]>,
    edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
}

fn pt(p: [f64; 2]) -> Point {
    Point::new(p[0], p[1])
}

fn arr(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

impl DrawingDocument {
    pub fn from_drawing(d: &Drawing) -> Self {
        let edges = d
            .edges
            .iter()
            .map(|e| match *e {
                Edge::Arc(a) => EdgeDoc::Arc {
                    u: a.u,
                    v: a.v,
                    side: if a.side == Side::Left { SideDoc::Left } else { SideDoc::Right },
                },
                Edge::Bend(b) => EdgeDoc::Bend { u: b.u, v: b.v, bend: arr(b.bend) },
            })
            .collect();
        let tolerance = (d.tolerance != DEFAULT_TOLERANCE).then_some(d.tolerance);
        DrawingDocument { alpha: d.alpha, vertices: d.vertices.iter().map(|&p| arr(p)).collect(), edges, tolerance }
    }

    /// `default_tolerance` applies when the document has none.
    pub fn into_drawing(self, default_tolerance: f64) -> Result<Drawing, IoError> {
        let edges = self
            .edges
            .into_iter()
            .map(|e| match e {
                EdgeDoc::Arc { u, v, side } => {
                    Edge::arc(u, v, if side == SideDoc::Left { Side::Left } else { Side::Right })
                }
                EdgeDoc::Bend { u, v, bend } => Edge::bend(u, v, pt(bend)),
            })
            .collect();
        let vertices = self.vertices.into_iter().map(pt).collect();
        Ok(Drawing::with_tolerance(self.alpha, vertices, edges, self.tolerance.unwrap_or(default_tolerance))?)
    }
}

pub fn parse_drawing(bytes: &[u8]) -> Result<Drawing, IoError> {
    parse_drawing_with(bytes, DEFAULT_TOLERANCE)
}

pub fn parse_drawing_with(bytes: &[u8], default_tolerance: f64) -> Result<Drawing, IoError> {
    let doc: DrawingDocument = serde_json::from_slice(bytes)?;
    doc.into_drawing(default_tolerance)
}

pub fn serialize_drawing(d: &Drawing) -> Vec<u8> {
    serde_json::to_vec(&DrawingDocument::from_drawing(d)).expect("drawing documents always serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDocument {
    points: Vec<[f64; 2]>,
}

/// `{"points": [[x, y], ...]}`
pub fn parse_points(bytes: &[u8]) -> Result<Vec<Point>, IoError> {
    let doc: PointsDocument = serde_json::from_slice(bytes)?;
    let points: Vec<Point> = doc.points.into_iter().map(pt).collect();
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(IoError::Document(format!("point {i} is not finite")));
    }
    Ok(points)
}

pub fn serialize_points(points: &[Point]) -> Vec<u8> {
    let doc = PointsDocument { points: points.iter().map(|&p| arr(p)).collect() };
    serde_json::to_vec(&doc).expect("point documents always serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentsDocument {
    segments: Vec<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    vertices: Vec<[f64; 2]>,
}

/// `{"segments": [[x1, y1, x2, y2], ...], "vertices": [[x, y], ...]}`; the
/// vertex list is optional.
pub fn parse_segments(bytes: &[u8]) -> Result<SegmentSet, IoError> {
    let doc: SegmentsDocument = serde_json::from_slice(bytes)?;
    Ok(SegmentSet {
        segments: doc
            .segments
            .into_iter()
            .map(|s| Segment::new(Point::new(s[0], s[1]), Point::new(s[2], s[3])))
            .collect(),
        vertices: doc.vertices.into_iter().map(pt).collect(),
    })
}

pub fn serialize_segments(set: &SegmentSet) -> Vec<u8> {
    let doc = SegmentsDocument {
        segments: set.segments.iter().map(|s| [s.a.x, s.a.y, s.b.x, s.b.y]).collect(),
        vertices: set.vertices.iter().map(|&p| arr(p)).collect(),
    };
    serde_json::to_vec(&doc).expect("segment documents always serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AcEdgeDoc {
    u: usize,
    v: usize,
    bend: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AcDocument {
    alpha: AngleSpec,
    vertices: Vec<[f64; 2]>,
    edges: Vec<AcEdgeDoc>,
}

/// Same layout as a drawing document, with untyped `{"u", "v", "bend"}` edges.
pub fn parse_ac_drawing(bytes: &[u8]) -> Result<AcDrawing, IoError> {
    let doc: AcDocument = serde_json::from_slice(bytes)?;
    Ok(AcDrawing {
        alpha: doc.alpha,
        vertices: doc.vertices.into_iter().map(pt).collect(),
        edges: doc.edges.into_iter().map(|e| AcEdge { u: e.u, v: e.v, bend: pt(e.bend) }).collect(),
    })
}

pub fn serialize_ac_drawing(d: &AcDrawing) -> Vec<u8> {
    let doc = AcDocument {
        alpha: d.alpha,
        vertices: d.vertices.iter().map(|&p| arr(p)).collect(),
        edges: d.edges.iter().map(|e| AcEdgeDoc { u: e.u, v: e.v, bend: arr(e.bend) }).collect(),
    };
    serde_json::to_vec(&doc).expect("documents always serialize")
}
