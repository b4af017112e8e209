//! The red multigraph of a fixed-angle-crossing drawing.
//!
//! Every edge `(u, bend, v)` has two segments, `(e, 0) = u → bend` and
//! `(e, 1) = v → bend`, each with a unique incident vertex. Following a
//! segment from its vertex to its first crossing and then along the crossed
//! segment to that segment's vertex gives a two-segment path `γ(s)`.

use std::f64::consts::PI;

use serde::Serialize;

use super::AcError;
use crate::angles::{select_noncrossing, SegmentSet};
use crate::kernel::segment::{segment_segment, Meet};
use crate::kernel::{angle_at_bend, perturb_layers, Drawing, Edge, PerturbOptions, DEFAULT_TOLERANCE};
use crate::validate::{validate_layers, Mode, ValidationReport};
use crate::{AngleSpec, PiRatio, Point, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AcEdge {
    pub u: usize,
    pub v: usize,
    pub bend: Point,
}

/// A drawing with one-bend edges; the bend angle is free.
#[derive(Debug, Clone, PartialEq)]
pub struct AcDrawing {
    pub alpha: AngleSpec,
    pub vertices: Vec<Point>,
    pub edges: Vec<AcEdge>,
}

/// Segment `end` of edge `edge`; end 0 is incident to `u`, end 1 to `v`.
pub type SegRef = (usize, usize);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcCrossing {
    pub a: SegRef,
    pub b: SegRef,
    pub point: Point,
    /// Angle between the two segment lines, in `[0, π/2]`.
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcReport {
    pub valid: bool,
    pub crossings: Vec<AcCrossing>,
    /// Indices into `crossings` whose angle is not α.
    pub wrong_angle: Vec<usize>,
    pub edge_errors: Vec<(usize, String)>,
    pub pair_errors: Vec<(usize, usize, String)>,
    /// Vertex pairs that coincide within tolerance.
    pub duplicate_vertices: Vec<(usize, usize)>,
}

impl AcDrawing {
    pub fn segment(&self, (e, end): SegRef) -> Segment {
        let edge = &self.edges[e];
        let w = if end == 0 { edge.u } else { edge.v };
        Segment::new(self.vertices[w], edge.bend)
    }

    pub fn incident_vertex(&self, (e, end): SegRef) -> usize {
        if end == 0 {
            self.edges[e].u
        } else {
            self.edges[e].v
        }
    }

    pub fn segment_refs(&self) -> impl Iterator<Item = SegRef> + '_ {
        (0..self.edges.len()).flat_map(|e| [(e, 0), (e, 1)])
    }

    fn near_vertex(&self, p: Point) -> bool {
        self.vertices.iter().any(|v| v.dist(p) <= DEFAULT_TOLERANCE)
    }
}

fn line_gap(s1: &Segment, s2: &Segment) -> f64 {
    let (d1, d2) = (s1.direction(), s2.direction());
    let theta = d1.cross(d2).abs().atan2(d1.dot(d2));
    theta.min(PI - theta)
}

fn edge_error(d: &AcDrawing, k: usize) -> Option<String> {
    let e = &d.edges[k];
    let n = d.vertices.len();
    if e.u >= n || e.v >= n {
        return Some(format!("vertex index out of range (n = {n})"));
    }
    if e.u == e.v {
        return Some("self-loop".into());
    }
    if !e.bend.is_finite() {
        return Some("bend is not finite".into());
    }
    if d.near_vertex(e.bend) {
        return Some("bend point coincides with a vertex".into());
    }
    if angle_at_bend(d.vertices[e.u], e.bend, d.vertices[e.v]).map_or(true, |a| a <= DEFAULT_TOLERANCE) {
        return Some("segments of the edge overlap".into());
    }
    for end in 0..2 {
        let s = d.segment((k, end));
        for (w, p) in d.vertices.iter().enumerate() {
            if w != e.u && w != e.v && s.distance_to(*p) <= DEFAULT_TOLERANCE {
                return Some(format!("passes through vertex {w}"));
            }
        }
    }
    None
}

/// Lists all crossings with their angles. The drawing is valid iff every
/// edge is well formed, no two edges overlap or touch at a bend, and every
/// crossing happens at angle `min(α, π − α)`.
pub fn validate_ac_drawing(d: &AcDrawing) -> AcReport {
    let eps = DEFAULT_TOLERANCE;
    let a = d.alpha.radians();
    let want = a.min(PI - a);
    let mut report = AcReport {
        valid: true,
        crossings: Vec::new(),
        wrong_angle: Vec::new(),
        edge_errors: Vec::new(),
        pair_errors: Vec::new(),
        duplicate_vertices: Vec::new(),
    };
    for i in 0..d.vertices.len() {
        for j in i + 1..d.vertices.len() {
            if d.vertices[i].dist(d.vertices[j]) <= eps {
                report.duplicate_vertices.push((i, j));
            }
        }
    }
    let usable: Vec<bool> = (0..d.edges.len())
        .map(|k| match edge_error(d, k) {
            Some(msg) => {
                report.edge_errors.push((k, msg));
                false
            }
            None => true,
        })
        .collect();
    for i in 0..d.edges.len() {
        for j in i + 1..d.edges.len() {
            if !(usable[i] && usable[j]) {
                continue;
            }
            let bends = [d.edges[i].bend, d.edges[j].bend];
            for ei in 0..2 {
                for ej in 0..2 {
                    let (s1, s2) = (d.segment((i, ei)), d.segment((j, ej)));
                    let points = match segment_segment(&s1, &s2, eps) {
                        Meet::Overlap(_) => {
                            report.pair_errors.push((i, j, "edges overlap".into()));
                            continue;
                        }
                        Meet::Points(p) => p,
                    };
                    for p in points.into_iter().filter(|p| !d.near_vertex(*p)) {
                        if bends.iter().any(|b| b.dist(p) <= eps) {
                            report.pair_errors.push((i, j, "edges meet at a bend point".into()));
                            continue;
                        }
                        let angle = line_gap(&s1, &s2);
                        if (angle - want).abs() > eps {
                            report.wrong_angle.push(report.crossings.len());
                        }
                        report.crossings.push(AcCrossing { a: (i, ei), b: (j, ej), point: p, angle });
                    }
                }
            }
        }
    }
    report.pair_errors.dedup();
    report.valid = report.duplicate_vertices.is_empty()
        && report.edge_errors.is_empty()
        && report.pair_errors.is_empty()
        && report.wrong_angle.is_empty();
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RedClass {
    AlphaBend,
    PiMinusAlphaBend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// The second segment meets another red edge away from its own bend.
    Gamma1,
    /// Both segments are crossing-free.
    Gamma2,
}

/// The path `from → bend → to`, built from segment `source` and the segment
/// `partner` it first crosses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RedEdge {
    pub source: SegRef,
    pub partner: SegRef,
    pub from: usize,
    pub bend: Point,
    pub to: usize,
    pub class: RedClass,
    pub tier: Tier,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RedGraph {
    pub alpha: AngleSpec,
    pub vertices: Vec<Point>,
    pub edges: Vec<RedEdge>,
}

impl RedEdge {
    pub fn first_segment(&self, vertices: &[Point]) -> Segment {
        Segment::new(vertices[self.from], self.bend)
    }

    pub fn second_segment(&self, vertices: &[Point]) -> Segment {
        Segment::new(self.bend, vertices[self.to])
    }

    /// Whether `other` is the same path traversed the other way.
    pub fn is_reverse_of(&self, other: &RedEdge) -> bool {
        self.from == other.to && self.to == other.from && self.bend.dist(other.bend) <= DEFAULT_TOLERANCE
    }
}

impl RedGraph {
    pub fn count(&self, tier: Tier) -> usize {
        self.edges.iter().filter(|e| e.tier == tier).count()
    }
}

/// Whether the second segment of `a` meets `b` at a point that is neither a
/// vertex nor the bend of `a`. Touching `b` at its bend counts; running
/// along a segment of `b` does not.
fn second_segment_meets(a: &RedEdge, b: &RedEdge, vertices: &[Point]) -> bool {
    let eps = DEFAULT_TOLERANCE;
    let sa = a.second_segment(vertices);
    [b.first_segment(vertices), b.second_segment(vertices)].iter().any(|sb| match segment_segment(&sa, sb, eps) {
        Meet::Overlap(_) => false,
        Meet::Points(ps) => ps.iter().any(|p| p.dist(a.bend) > eps && vertices.iter().all(|v| v.dist(*p) > eps)),
    })
}

pub fn extract_red_graph(d: &AcDrawing) -> Result<RedGraph, AcError> {
    let report = validate_ac_drawing(d);
    if !report.valid {
        return Err(AcError::Invalid(Box::new(report)));
    }
    let eps = DEFAULT_TOLERANCE;
    let a = d.alpha.radians();
    let mut hits: std::collections::BTreeMap<SegRef, Vec<(f64, SegRef, Point)>> = Default::default();
    for c in &report.crossings {
        for (s, t) in [(c.a, c.b), (c.b, c.a)] {
            let dist = d.vertices[d.incident_vertex(s)].dist(c.point);
            hits.entry(s).or_default().push((dist, t, c.point));
        }
    }
    let mut edges = Vec::new();
    for s in d.segment_refs() {
        let Some(list) = hits.get_mut(&s) else {
            continue;
        };
        list.sort_by(|x, y| x.0.total_cmp(&y.0));
        let (dist, partner, x) = list[0];
        if let Some(&(d2, p2, _)) = list.get(1) {
            if d2 - dist <= eps && p2 != partner {
                return Err(AcError::Tie(s, partner, p2));
            }
        }
        let from = d.incident_vertex(s);
        let to = d.incident_vertex(partner);
        let angle = angle_at_bend(d.vertices[from], x, d.vertices[to]).unwrap_or(a);
        let class = if (angle - a).abs() <= (angle - (PI - a)).abs() {
            RedClass::AlphaBend
        } else {
            RedClass::PiMinusAlphaBend
        };
        edges.push(RedEdge { source: s, partner, from, bend: x, to, class, tier: Tier::Gamma2 });
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (s1, s2) = (edges[i].first_segment(&d.vertices), edges[j].first_segment(&d.vertices));
            if matches!(segment_segment(&s1, &s2, eps), Meet::Overlap(_)) {
                return Err(AcError::FirstSegmentsOverlap(i, j));
            }
        }
    }
    let tiers: Vec<Tier> = (0..edges.len())
        .map(|i| {
            let crosses = (0..edges.len()).any(|j| j != i && second_segment_meets(&edges[i], &edges[j], &d.vertices));
            if crosses {
                Tier::Gamma1
            } else {
                Tier::Gamma2
            }
        })
        .collect();
    for (e, t) in edges.iter_mut().zip(tiers) {
        e.tier = t;
    }
    Ok(RedGraph { alpha: d.alpha, vertices: d.vertices.clone(), edges })
}

#[derive(Debug, Clone)]
pub struct RedSelection {
    /// Indices of the kept red edges, ascending.
    pub kept: Vec<usize>,
    pub kept_gamma1: usize,
    pub kept_gamma2: usize,
    /// Guaranteed fraction `num/den` of the red edges.
    pub ratio: (usize, usize),
    /// The α-bend layer and the (π − α)-bend layer after perturbation.
    pub layers: Vec<Drawing>,
    pub report: ValidationReport,
}

/// Guaranteed fraction of a crossing-at-α segment set that can be kept
/// pairwise noncrossing.
pub fn selection_ratio(alpha: AngleSpec) -> (usize, usize) {
    match alpha.pi_ratio() {
        PiRatio::OddNumerator { k } => (k as usize, 2 * k as usize + 1),
        PiRatio::Irrational | PiRatio::EvenNumerator { .. } => (1, 2),
    }
}

/// Keeps a plane sub-multigraph of the red graph: a noncrossing selection of
/// the second segments of tier-1 edges, and one of each reversed pair in
/// tier 2.
pub fn select_red_subset(red: &RedGraph, alpha: AngleSpec) -> Result<RedSelection, AcError> {
    if alpha.cmp_frac_pi(1, 2).is_gt() {
        return Err(AcError::AngleRange(alpha));
    }
    let vs = &red.vertices;
    let tier1: Vec<usize> = (0..red.edges.len()).filter(|&i| red.edges[i].tier == Tier::Gamma1).collect();
    let tier2: Vec<usize> = (0..red.edges.len()).filter(|&i| red.edges[i].tier == Tier::Gamma2).collect();
    let set =
        SegmentSet { segments: tier1.iter().map(|&i| red.edges[i].second_segment(vs)).collect(), vertices: vs.clone() };
    let kept1: Vec<usize> = select_noncrossing(&set, alpha)?.into_iter().map(|k| tier1[k]).collect();
    let mut kept2: Vec<usize> = Vec::new();
    for &i in &tier2 {
        if !kept2.iter().any(|&j| red.edges[i].is_reverse_of(&red.edges[j])) {
            kept2.push(i);
        }
    }

    let (num, den) = selection_ratio(alpha);
    let checks = [
        (kept1.len(), tier1.len(), num, den),
        (kept2.len(), tier2.len(), 1, 2),
        (kept1.len() + kept2.len(), red.edges.len(), num, den),
    ];
    for (kept, total, num, den) in checks {
        if kept * den < num * total {
            return Err(AcError::Ratio { kept, total, num, den });
        }
    }

    let mut kept: Vec<usize> = kept1.iter().chain(&kept2).copied().collect();
    kept.sort_unstable();
    let layer = |class, angle| {
        let edges = kept
            .iter()
            .map(|&i| &red.edges[i])
            .filter(|e| e.class == class)
            .map(|e| Edge::bend(e.from, e.to, e.bend))
            .collect();
        Drawing::new(angle, vs.clone(), edges)
    };
    let layers = vec![layer(RedClass::AlphaBend, alpha)?, layer(RedClass::PiMinusAlphaBend, alpha.supplement())?];
    let layers = perturb_layers(&layers, &PerturbOptions::default())?;
    let report = validate_layers(&layers, Mode::Multigraph);
    if !report.valid {
        return Err(AcError::NotPlane(Box::new(report)));
    }
    Ok(RedSelection { kept, kept_gamma1: kept1.len(), kept_gamma2: kept2.len(), ratio: (num, den), layers, report })
}
