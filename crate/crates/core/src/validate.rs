//! Planarity and multiplicity checks, lenses, and the triangle obstruction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{pieces_cross, CrossKind, Drawing, DrawingError, Edge, Piece, Side};
use crate::{AngleSpec, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Simple,
    Multigraph,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub mode: Mode,
    pub edge_errors: Vec<(usize, String)>,
    pub crossing_pairs: Vec<(usize, usize)>,
    /// Pairs sharing a curve piece of positive length.
    pub overlap_pairs: Vec<(usize, usize)>,
    pub multiplicity_violations: Vec<(usize, usize)>,
}

#[derive(Debug, Error)]
pub enum ValidateError {
    #[error("drawing is not a valid plane multigraph")]
    Invalid(Box<ValidationReport>),
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("bend {0} is invalid: {1}")]
    InvalidBend(usize, String),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

pub fn validate_drawing(drawing: &Drawing, mode: Mode) -> ValidationReport {
    validate_layers(std::slice::from_ref(drawing), mode)
}

/// Validates the union of several drawings over one vertex set, each checked
/// against its own angle. Edge indices run through the layers in order;
/// multiplicity is checked within each layer.
pub fn validate_layers(layers: &[Drawing], mode: Mode) -> ValidationReport {
    let mut report = ValidationReport {
        valid: true,
        mode,
        edge_errors: Vec::new(),
        crossing_pairs: Vec::new(),
        overlap_pairs: Vec::new(),
        multiplicity_violations: Vec::new(),
    };
    let mut flat: Vec<(&Drawing, &Edge)> = Vec::new();
    for d in layers {
        flat.extend(d.edges.iter().map(|e| (d, e)));
    }
    if let Some(first) = layers.first() {
        if let Some(bad) = layers.iter().position(|d| d.vertices != first.vertices) {
            for (i, &(d, _)) in flat.iter().enumerate() {
                if std::ptr::eq(d, &layers[bad]) {
                    report.edge_errors.push((i, "layer vertex set differs".into()));
                }
            }
        }
    }

    let mut usable = vec![true; flat.len()];
    for (i, &(d, e)) in flat.iter().enumerate() {
        if let Some(reason) = d.edge_defect(e) {
            let (u, v) = e.endpoints();
            if u >= d.n() || v >= d.n() || u == v {
                usable[i] = false;
            }
            report.edge_errors.push((i, reason));
        }
    }

    let pieces: Vec<Vec<Piece>> =
        flat.iter().zip(&usable).map(|(&(d, e), &ok)| if ok { d.pieces(e) } else { Vec::new() }).collect();
    if let Some(first) = layers.first() {
        for i in 0..flat.len() {
            for j in i + 1..flat.len() {
                if !usable[i] || !usable[j] {
                    continue;
                }
                match pieces_cross(&pieces[i], &pieces[j], &first.vertices, first.tolerance).kind {
                    CrossKind::Cross => report.crossing_pairs.push((i, j)),
                    CrossKind::Overlap => report.overlap_pairs.push((i, j)),
                    _ => {}
                }
            }
        }
    }

    // Multiplicity is a per-layer property: each layer is one edge type.
    let mut by_pair: std::collections::BTreeMap<(usize, usize, usize), Vec<usize>> = Default::default();
    let mut offset = 0;
    for (l, d) in layers.iter().enumerate() {
        for (k, e) in d.edges.iter().enumerate() {
            if usable[offset + k] {
                let (u, v) = e.pair();
                by_pair.entry((u, v, l)).or_default().push(offset + k);
            }
        }
        offset += d.edges.len();
    }
    for ((u, v, _), idx) in by_pair {
        let bad = match (mode, idx.len()) {
            (_, 1) => false,
            (Mode::Simple, _) => true,
            (Mode::Multigraph, 2) => {
                let s0 = flat[idx[0]].0.canonical_side(flat[idx[0]].1);
                let s1 = flat[idx[1]].0.canonical_side(flat[idx[1]].1);
                !matches!((s0, s1), (Some(a), Some(b)) if a != b)
            }
            (Mode::Multigraph, _) => true,
        };
        if bad {
            report.multiplicity_violations.push((u, v));
        }
    }

    report.valid = report.edge_errors.is_empty()
        && report.crossing_pairs.is_empty()
        && report.overlap_pairs.is_empty()
        && report.multiplicity_violations.is_empty();
    report
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lens {
    pub pair: (usize, usize),
    pub edge_indices: (usize, usize),
    pub empty: bool,
    pub interior_vertices: Vec<usize>,
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LensForest {
    pub lenses: Vec<Lens>,
    /// Innermost lens strictly containing each lens.
    pub parent: Vec<Option<usize>>,
}

impl LensForest {
    pub fn depth(&self) -> usize {
        (0..self.lenses.len())
            .map(|mut i| {
                let mut d = 1;
                while let Some(p) = self.parent[i] {
                    d += 1;
                    i = p;
                }
                d
            })
            .max()
            .unwrap_or(0)
    }
}

/// Region between an edge and its chord.
struct Half {
    a: Point,
    c: Point,
    shape: HalfShape,
}

enum HalfShape {
    Cap(crate::kernel::ArcGeometry<f64>),
    Triangle(Point),
}

impl Half {
    fn of(d: &Drawing, e: &Edge) -> Option<Half> {
        let (u, v) = e.endpoints();
        let (a, c) = (d.vertices[u], d.vertices[v]);
        let shape = match e {
            Edge::Arc(arc) => HalfShape::Cap(d.arc_geometry(arc)?),
            Edge::Bend(b) => HalfShape::Triangle(b.bend),
        };
        Some(Half { a, c, shape })
    }

    fn area(&self) -> f64 {
        match &self.shape {
            HalfShape::Cap(g) => g.cap_area(),
            HalfShape::Triangle(b) => 0.5 * (*b - self.a).cross(self.c - self.a).abs(),
        }
    }

    fn contains(&self, p: Point, eps: f64) -> bool {
        match &self.shape {
            HalfShape::Cap(g) => g.cap_contains(p, eps),
            HalfShape::Triangle(b) => {
                let tri = [self.a, *b, self.c];
                let orient = (tri[1] - tri[0]).cross(tri[2] - tri[0]).signum();
                (0..3).all(|k| {
                    let (s, t) = (tri[k], tri[(k + 1) % 3]);
                    orient * crate::kernel::point::signed_distance(s, t, p) > eps
                })
            }
        }
    }
}

fn chord_interior(a: Point, c: Point, p: Point, eps: f64) -> bool {
    let d = c - a;
    let t = (p - a).dot(d) / d.dot(d);
    let len = d.norm();
    crate::kernel::point::signed_distance(a, c, p).abs() <= eps && t * len > eps && (1.0 - t) * len > eps
}

pub fn find_lenses(drawing: &Drawing) -> Result<LensForest, ValidateError> {
    let report = validate_drawing(drawing, Mode::Multigraph);
    if !report.valid {
        return Err(ValidateError::Invalid(Box::new(report)));
    }
    let eps = drawing.tolerance;
    let mut regions = Vec::new();
    let mut lenses = Vec::new();
    for (pair, idx) in drawing.pair_multiplicities() {
        if idx.len() != 2 {
            continue;
        }
        let halves: Vec<Half> = idx.iter().filter_map(|&i| Half::of(drawing, &drawing.edges[i])).collect();
        let (a, c) = (drawing.vertices[pair.0], drawing.vertices[pair.1]);
        let inside = |p: Point| halves.iter().any(|h| h.contains(p, eps)) || chord_interior(a, c, p, eps);
        let interior_vertices: Vec<usize> = (0..drawing.n()).filter(|&w| inside(drawing.vertices[w])).collect();
        lenses.push(Lens {
            pair,
            edge_indices: (idx[0], idx[1]),
            empty: interior_vertices.is_empty(),
            interior_vertices,
            area: halves.iter().map(Half::area).sum(),
        });
        regions.push((halves, a, c));
    }
    let parent = (0..lenses.len())
        .map(|i| {
            let (a, c) = (regions[i].1, regions[i].2);
            let probe = a.midpoint(c);
            (0..lenses.len())
                .filter(|&j| j != i && lenses[j].area > lenses[i].area)
                .filter(|&j| {
                    let (halves, ja, jc) = &regions[j];
                    halves.iter().any(|h| h.contains(probe, eps)) || chord_interior(*ja, *jc, probe, eps)
                })
                .min_by(|&x, &y| lenses[x].area.total_cmp(&lenses[y].area))
        })
        .collect();
    Ok(LensForest { lenses, parent })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    InfeasibleAngleSum,
    CrossingFound,
    Feasible,
}

/// Places one α-bend edge inside each side of a triangle, the bend of side
/// `t[k] t[k+1]` being `bends[k]`, and reports why the three edges cannot
/// coexist, if they cannot.
pub fn check_triangle_obstruction(
    alpha: AngleSpec,
    triangle: [Point; 3],
    bends: [Point; 3],
) -> Result<Obstruction, ValidateError> {
    let [p, q, r] = triangle;
    let area2 = (q - p).cross(r - p);
    let scale = (q - p).norm().max((r - p).norm()).max((r - q).norm());
    if !(area2.abs() > 1e-12 * scale * scale) {
        return Err(ValidateError::DegenerateTriangle);
    }
    let edges = (0..3).map(|k| Edge::bend(k, (k + 1) % 3, bends[k])).collect();
    let drawing = Drawing::new(alpha, triangle.to_vec(), edges)?;
    let eps = drawing.tolerance;
    for (k, e) in drawing.edges.iter().enumerate() {
        if let Some(reason) = drawing.edge_defect(e) {
            return Err(ValidateError::InvalidBend(k, reason));
        }
        let inward = Side::of_point(triangle[k], triangle[(k + 1) % 3], triangle[(k + 2) % 3], eps);
        if Side::of_point(triangle[k], triangle[(k + 1) % 3], bends[k], eps) != inward {
            return Err(ValidateError::InvalidBend(k, "bend lies outside the triangle".into()));
        }
    }
    let report = validate_drawing(&drawing, Mode::Simple);
    if !report.crossing_pairs.is_empty() || !report.overlap_pairs.is_empty() {
        return Ok(Obstruction::CrossingFound);
    }
    // Interior angles of the hexagon t0 b0 t1 b1 t2 b2 at the triangle corners.
    let orient = area2.signum();
    let sum: f64 = (0..3)
        .map(|k| {
            let t = triangle[k];
            let next = bends[k] - t;
            let prev = bends[(k + 2) % 3] - t;
            (orient * next.cross(prev)).atan2(next.dot(prev))
        })
        .sum();
    Ok(if sum <= eps { Obstruction::InfeasibleAngleSum } else { Obstruction::Feasible })
}
