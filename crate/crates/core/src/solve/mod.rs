//! Maximum plane α-arc / α-bend (multi)graphs on small point sets.

mod mis;

pub use mis::{max_independent_set, max_independent_set_with, Budget, ConflictGraph, MisError};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::find_collinear_triple;
use crate::kernel::{bend_point_on_arc, pieces_cross, Drawing, DrawingError, Piece};
use crate::validate::Mode;
use crate::{AngleSpec, Edge, Point, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Arc,
    Bend,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("no blocking angle above {0} rad")]
    NoBlockingAngle(f64),
    #[error(transparent)]
    Budget(#[from] MisError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    pub family: Family,
    pub candidates: Vec<Edge>,
    /// Candidate indices per unordered vertex pair.
    pub by_pair: BTreeMap<(usize, usize), Vec<usize>>,
}

impl CandidateSet {
    fn from_edges(family: Family, candidates: Vec<Edge>) -> Self {
        let mut by_pair: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, e) in candidates.iter().enumerate() {
            by_pair.entry(e.pair()).or_default().push(i);
        }
        CandidateSet { family, candidates, by_pair }
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// Two α-arcs per pair, or `k` bend points per side at `t = i/(k+1)`.
pub fn enumerate_candidates(points: &[Point], alpha: AngleSpec, family: Family, k: usize) -> CandidateSet {
    let a = alpha.radians();
    let mut out = Vec::new();
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            for side in [Side::Left, Side::Right] {
                match family {
                    Family::Arc => out.push(Edge::arc(u, v, side)),
                    Family::Bend => {
                        for i in 1..=k {
                            let t = i as f64 / (k + 1) as f64;
                            if let Ok(b) = bend_point_on_arc(points[u], points[v], side, a, t) {
                                out.push(Edge::bend(u, v, b));
                            }
                        }
                    }
                }
            }
        }
    }
    CandidateSet::from_edges(family, out)
}

fn context(points: &[Point], alpha: AngleSpec, cands: &CandidateSet) -> Result<Drawing, DrawingError> {
    Drawing::new(alpha, points.to_vec(), cands.candidates.clone())
}

/// Pairwise conflicts: crossing or overlapping candidates, and in simple mode
/// any two candidates on one vertex pair. Candidates on one pair and one side
/// always conflict.
pub fn build_conflict_graph(
    cands: &CandidateSet,
    points: &[Point],
    alpha: AngleSpec,
    mode: Mode,
) -> Result<ConflictGraph, SolveError> {
    let d = context(points, alpha, cands)?;
    let pieces: Vec<Vec<Piece>> = d.edges.iter().map(|e| d.pieces(e)).collect();
    let mut g = ConflictGraph::new(cands.len());
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            let (ei, ej) = (&d.edges[i], &d.edges[j]);
            let same_pair = ei.pair() == ej.pair();
            let clash = same_pair && (mode == Mode::Simple || d.canonical_side(ei) == d.canonical_side(ej));
            if clash || pieces_cross(&pieces[i], &pieces[j], &d.vertices, d.tolerance).conflicts() {
                g.add_conflict(i, j);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneGraph {
    pub count: usize,
    pub witness: Drawing,
    /// True for the arc family; the bend family only yields a lower bound.
    pub exact: bool,
}

pub fn max_plane_graph(
    points: &[Point],
    alpha: AngleSpec,
    family: Family,
    mode: Mode,
    k: usize,
) -> Result<PlaneGraph, SolveError> {
    max_plane_graph_with(points, alpha, family, mode, k, Budget::default())
}

pub fn max_plane_graph_with(
    points: &[Point],
    alpha: AngleSpec,
    family: Family,
    mode: Mode,
    k: usize,
    budget: Budget,
) -> Result<PlaneGraph, SolveError> {
    let all = enumerate_candidates(points, alpha, family, k);
    let d = context(points, alpha, &all)?;
    let usable: Vec<Edge> = d.edges.iter().copied().filter(|e| d.edge_defect(e).is_none()).collect();
    let cands = CandidateSet::from_edges(family, usable);
    let graph = build_conflict_graph(&cands, points, alpha, mode)?;
    let chosen = max_independent_set_with(&graph, budget)?;
    let witness = Drawing::new(alpha, points.to_vec(), chosen.iter().map(|&i| cands.candidates[i]).collect())?;
    Ok(PlaneGraph { count: chosen.len(), witness, exact: family == Family::Arc })
}

/// `3n - h - 3`, the edge count of any triangulation.
pub fn straightline_max(points: &[Point]) -> Result<usize, SolveError> {
    let n = points.len();
    if n < 3 {
        return Err(SolveError::TooFewPoints { need: 3, got: n });
    }
    if let Some((i, j, k)) = find_collinear_triple(points) {
        return Err(SolveError::CollinearTriple(i, j, k));
    }
    Ok(3 * n - convex_hull(points).len() - 3)
}

/// Indices of the convex hull in counterclockwise order (monotone chain).
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x).then(points[a].y.total_cmp(&points[b].y)));
    if idx.len() < 3 {
        return idx;
    }
    let turn = |o: usize, a: usize, b: usize| (points[a] - points[o]).cross(points[b] - points[o]);
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &p in seq {
            while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

const BLOCKING_FLOOR: f64 = 1e-4;

/// Whether every two α-arc candidates on distinct vertex pairs conflict.
pub fn arcs_all_blocked(points: &[Point], alpha: f64) -> Result<bool, SolveError> {
    let spec = AngleSpec::irrational(alpha).map_err(|_| SolveError::NoBlockingAngle(alpha))?;
    let cands = enumerate_candidates(points, spec, Family::Arc, 1);
    let d = context(points, spec, &cands)?;
    let pieces: Vec<Vec<Piece>> = d.edges.iter().map(|e| d.pieces(e)).collect();
    for i in 0..d.edges.len() {
        for j in i + 1..d.edges.len() {
            if d.edges[i].pair() != d.edges[j].pair()
                && !pieces_cross(&pieces[i], &pieces[j], &d.vertices, d.tolerance).conflicts()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An angle below which any two α-arcs on distinct pairs cross, located by
/// bisection on [`arcs_all_blocked`].
pub fn arc_blocking_threshold(points: &[Point]) -> Result<f64, SolveError> {
    let n = points.len();
    if n < 3 {
        return Err(SolveError::TooFewPoints { need: 3, got: n });
    }
    if let Some((i, j, k)) = find_collinear_triple(points) {
        return Err(SolveError::CollinearTriple(i, j, k));
    }
    if !arcs_all_blocked(points, BLOCKING_FLOOR)? {
        return Err(SolveError::NoBlockingAngle(BLOCKING_FLOOR));
    }
    let pi = std::f64::consts::PI;
    let mut lo = BLOCKING_FLOOR;
    let mut hi = std::f64::consts::FRAC_PI_2;
    while arcs_all_blocked(points, hi)? {
        lo = hi;
        hi = (hi + pi) / 2.0;
        if pi - hi < 1e-9 {
            return Ok(lo);
        }
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if arcs_all_blocked(points, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    Ok(lo)
}
