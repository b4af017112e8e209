//! Removal of overlaps between bend edges by sliding bend points along their
//! own arcs.
//!
//! Overlapping bend edges always share a vertex `w` and leave it along the
//! same ray. Such a bundle is split by rotating the segments at `w` into a
//! fixed counterclockwise order: edges turning right before edges turning
//! left, and on each side the shorter shared prefix farther out. Rotating the
//! segment at one end of an edge rotates the segment at its other end the
//! opposite way, so the per-bundle orderings are solved jointly before an
//! angular step is chosen. The result is certified by re-running the
//! crossing predicate, and the step is halved until it passes.

use thiserror::Error;

use super::arc::{angle_at_bend, bend_with_start_angle, Side};
use super::cross::{pieces_cross, CrossKind};
use super::drawing::{Drawing, Edge};
use crate::Point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbOptions {
    /// Largest distance a bend point may travel; defaults to `1e-3` times the
    /// shortest bend-edge chord.
    pub max_shift: Option<f64>,
    /// Number of times the angular step is halved before giving up.
    pub max_halvings: u32,
}

impl Default for PerturbOptions {
    fn default() -> Self {
        PerturbOptions { max_shift: None, max_halvings: 48 }
    }
}

/// An edge identified by `(layer, index)`.
pub type EdgeRef = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PerturbError {
    #[error("layers must share one vertex set")]
    VertexMismatch,
    #[error("arc edges {0:?} and {1:?} overlap; arcs cannot be perturbed")]
    ArcOverlap(EdgeRef, EdgeRef),
    #[error("edges {0:?} and {1:?} cross; only overlaps can be removed")]
    Crossing(EdgeRef, EdgeRef),
    #[error("edges {0:?} and {1:?} overlap away from a common vertex")]
    Unbundled(EdgeRef, EdgeRef),
    #[error("overlap constraints around edge {0:?} are contradictory")]
    Irreducible(EdgeRef),
    #[error("conflict between {0:?} and {1:?} persists at every step size")]
    Failed(EdgeRef, EdgeRef),
}

pub fn perturb_overlaps(drawing: &Drawing, opts: &PerturbOptions) -> Result<Drawing, PerturbError> {
    let mut out = perturb_layers(std::slice::from_ref(drawing), opts)?;
    Ok(out.pop().expect("one layer in, one layer out"))
}

/// All crossing or overlapping edge pairs across the given layers.
pub fn conflict_pairs(layers: &[Drawing]) -> Vec<(EdgeRef, EdgeRef, CrossKind)> {
    let refs: Vec<EdgeRef> =
        layers.iter().enumerate().flat_map(|(l, d)| (0..d.edges.len()).map(move |i| (l, i))).collect();
    let pieces: Vec<_> = refs.iter().map(|&(l, i)| layers[l].pieces(&layers[l].edges[i])).collect();
    let vertices = &layers[0].vertices;
    let eps = layers[0].tolerance;
    let mut out = Vec::new();
    for a in 0..refs.len() {
        for b in a + 1..refs.len() {
            let r = pieces_cross(&pieces[a], &pieces[b], vertices, eps);
            if r.conflicts() {
                out.push((refs[a], refs[b], r.kind));
            }
        }
    }
    out
}

struct Member {
    edge: EdgeRef,
    /// Whether the bundle vertex is the edge's `u` endpoint.
    at_u: bool,
    turn: Side,
    length: f64,
    alpha: f64,
}

pub fn perturb_layers(layers: &[Drawing], opts: &PerturbOptions) -> Result<Vec<Drawing>, PerturbError> {
    if layers.is_empty() {
        return Ok(Vec::new());
    }
    if layers.iter().any(|d| d.vertices != layers[0].vertices) {
        return Err(PerturbError::VertexMismatch);
    }
    let conflicts = conflict_pairs(layers);
    if conflicts.is_empty() {
        return Ok(layers.to_vec());
    }
    let edge = |r: EdgeRef| &layers[r.0].edges[r.1];
    for &(a, b, kind) in &conflicts {
        if kind == CrossKind::Cross {
            return Err(PerturbError::Crossing(a, b));
        }
        if edge(a).is_arc() || edge(b).is_arc() {
            return Err(PerturbError::ArcOverlap(a, b));
        }
    }

    let vertices = &layers[0].vertices;
    let bundles = bundles(layers);
    for &(a, b, _) in &conflicts {
        let together = bundles.iter().any(|m| m.iter().any(|x| x.edge == a) && m.iter().any(|x| x.edge == b));
        if !together {
            return Err(PerturbError::Unbundled(a, b));
        }
    }

    let delta = solve_rotations(&bundles)?;

    let max_shift = opts.max_shift.unwrap_or_else(|| {
        let shortest = layers
            .iter()
            .flat_map(|d| d.edges.iter().map(move |e| (d, e)))
            .filter(|(_, e)| !e.is_arc())
            .map(|(d, e)| {
                let (u, v) = e.endpoints();
                d.vertices[u].dist(d.vertices[v])
            })
            .fold(f64::INFINITY, f64::min);
        1e-3 * shortest
    });

    // Per-edge start angle at u and the largest admissible step.
    let mut step = f64::INFINITY;
    let mut moves = Vec::new();
    for (&r, &k) in &delta {
        if k == 0 {
            continue;
        }
        let d = &layers[r.0];
        let Edge::Bend(b) = d.edges[r.1] else { unreachable!("bundles hold bend edges only") };
        let (pu, pv) = (vertices[b.u], vertices[b.v]);
        let alpha = angle_at_bend(pu, b.bend, pv).unwrap_or(d.alpha_radians());
        let phi_u = angle_at_bend(pv, pu, b.bend).unwrap_or(0.0);
        let phi_v = std::f64::consts::PI - alpha - phi_u;
        let side = Side::of_point(pu, pv, b.bend, 0.0).unwrap_or(Side::Left);
        let radius = pu.dist(pv) / (2.0 * alpha.sin());
        let k = k as f64;
        step = step.min(max_shift / (2.0 * radius * k.abs()));
        step = step.min(0.25 * phi_u.min(phi_v) / k.abs());
        moves.push((r, k, phi_u, side, alpha, pu, pv));
    }

    let mut theta = step;
    let mut last = None;
    for _ in 0..=opts.max_halvings {
        let mut out = layers.to_vec();
        for &(r, k, phi_u, side, alpha, pu, pv) in &moves {
            let bend: Point = bend_with_start_angle(pu, pv, side, alpha, phi_u - k * theta)
                .expect("step keeps the bend inside its arc");
            if let Edge::Bend(b) = &mut out[r.0].edges[r.1] {
                b.bend = bend;
            }
        }
        match conflict_pairs(&out).first() {
            None => return Ok(out),
            Some(&(a, b, _)) => last = Some((a, b)),
        }
        theta *= 0.5;
    }
    let (a, b) = last.expect("at least one attempt");
    Err(PerturbError::Failed(a, b))
}

/// Groups bend-edge segments that leave a common vertex along a common ray.
fn bundles(layers: &[Drawing]) -> Vec<Vec<Member>> {
    let vertices = &layers[0].vertices;
    let mut out = Vec::new();
    for (w, &pw) in vertices.iter().enumerate() {
        let mut rays: Vec<(Point, Option<Member>)> = Vec::new();
        for (l, d) in layers.iter().enumerate() {
            for (i, e) in d.edges.iter().enumerate() {
                let Edge::Bend(b) = e else { continue };
                for (at_u, this, other) in [(true, b.u, b.v), (false, b.v, b.u)] {
                    if this != w {
                        continue;
                    }
                    let dir = b.bend - pw;
                    let turn = if dir.cross(vertices[other] - pw) > 0.0 { Side::Left } else { Side::Right };
                    let alpha = angle_at_bend(vertices[b.u], b.bend, vertices[b.v]).unwrap_or(0.0);
                    let m = Member { edge: (l, i), at_u, turn, length: dir.norm(), alpha };
                    rays.push((dir.normalized(), Some(m)));
                }
            }
        }
        let mut used = vec![false; rays.len()];
        for i in 0..rays.len() {
            if used[i] {
                continue;
            }
            let mut group = vec![i];
            for j in i + 1..rays.len() {
                if !used[j] && rays[i].0.cross(rays[j].0).abs() <= 1e-9 && rays[i].0.dot(rays[j].0) > 0.0 {
                    group.push(j);
                }
            }
            if group.len() < 2 {
                continue;
            }
            for &g in &group {
                used[g] = true;
            }
            out.push(group.iter().filter_map(|&g| rays[g].1.take()).collect());
        }
    }
    out
}

/// Integer rotations (in units of the angular step) toward each edge's chord
/// at its `u` endpoint.
///
/// A member's counterclockwise rotation at the bundle vertex is `τ·Δ` with
/// `τ = ±1`, so each ordering constraint reads `τ_b Δ_b − τ_a Δ_a ≥ 1`. Nodes
/// `+Δ` and `−Δ` of every edge turn these into longest-path constraints;
/// `Δ = (p(+Δ) − p(−Δ)) / 2` then satisfies all of them, and the doubled
/// value is integral.
fn solve_rotations(bundles: &[Vec<Member>]) -> Result<std::collections::BTreeMap<EdgeRef, i64>, PerturbError> {
    use std::collections::BTreeMap;

    let mut index: BTreeMap<EdgeRef, usize> = BTreeMap::new();
    for m in bundles.iter().flatten() {
        let next = index.len();
        index.entry(m.edge).or_insert(next);
    }
    let literal = |m: &Member| {
        let ccw = (m.turn == Side::Left) == m.at_u;
        2 * index[&m.edge] + usize::from(!ccw)
    };
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for bundle in bundles {
        // counterclockwise order: right turns (short to long), then left turns (long to short)
        let mut order: Vec<&Member> = bundle.iter().collect();
        order.sort_by(|a, b| {
            let key = |m: &Member| if m.turn == Side::Right { (0, m.length) } else { (1, -m.length) };
            let (ka, kb) = (key(a), key(b));
            ka.0.cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(b.alpha.total_cmp(&a.alpha)).then(a.edge.cmp(&b.edge))
        });
        for w in order.windows(2) {
            let (a, b) = (literal(w[0]), literal(w[1]));
            arcs.push((a, b));
            arcs.push((b ^ 1, a ^ 1));
        }
    }
    let mut pot = vec![0i64; 2 * index.len()];
    for round in 0..=pot.len() {
        let mut changed = None;
        for &(a, b) in &arcs {
            if pot[b] < pot[a] + 1 {
                pot[b] = pot[a] + 1;
                changed = Some(b / 2);
            }
        }
        match changed {
            None => return Ok(index.iter().map(|(&e, &i)| (e, pot[2 * i] - pot[2 * i + 1])).collect()),
            Some(i) if round == pot.len() => {
                let culprit = index.iter().find(|(_, &j)| j == i).map(|(&e, _)| e).unwrap_or((0, 0));
                return Err(PerturbError::Irreducible(culprit));
            }
            Some(_) => {}
        }
    }
    unreachable!("the last round either converges or reports a cycle")
}
