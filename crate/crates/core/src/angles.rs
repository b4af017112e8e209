//! Selecting and partitioning segments whose crossings all occur at one angle.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::kernel::segment::{segment_segment, Meet};
use crate::{AngleSpec, Point, Segment};

/// Tolerance for merging directions and matching angles, in radians.
pub const DIRECTION_TOLERANCE: f64 = 1e-9;
const POINT_TOLERANCE: f64 = 1e-9;

/// Segments together with the vertex set at which meeting is not crossing.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SegmentSet {
    pub segments: Vec<Segment>,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnglesError {
    #[error("segment {0} has zero length")]
    ZeroLength(usize),
    #[error("segments {0} and {1} cross at {2} rad, not at the given angle")]
    WrongAngle(usize, usize, f64),
    #[error("segments {0} and {1} in one output class cross")]
    Unverified(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Nodes in walk order.
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionGraph {
    /// Distinct directions in `[0, π)`, ascending.
    pub directions: Vec<f64>,
    pub weights: Vec<usize>,
    /// Segment indices per direction.
    pub members: Vec<Vec<usize>>,
    pub adjacency: Vec<Vec<usize>>,
    pub components: Vec<Component>,
}

fn angle_mod_pi(a: f64) -> f64 {
    let r = a.rem_euclid(PI);
    if PI - r <= DIRECTION_TOLERANCE {
        0.0
    } else {
        r
    }
}

/// Distance between two directions modulo π.
fn direction_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

pub fn build_direction_graph(set: &SegmentSet, alpha: AngleSpec) -> Result<DirectionGraph, AnglesError> {
    let mut dirs: Vec<(f64, usize)> = Vec::new();
    for (i, s) in set.segments.iter().enumerate() {
        if s.length() <= POINT_TOLERANCE {
            return Err(AnglesError::ZeroLength(i));
        }
        dirs.push((angle_mod_pi(s.direction().angle()), i));
    }
    dirs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut directions: Vec<f64> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (d, i) in dirs {
        match directions.last() {
            Some(&last) if d - last <= DIRECTION_TOLERANCE => members.last_mut().unwrap().push(i),
            _ => {
                directions.push(d);
                members.push(vec![i]);
            }
        }
    }
    // Directions just below π coincide with 0.
    if directions.len() > 1 && direction_gap(directions[0], *directions.last().unwrap()) <= DIRECTION_TOLERANCE {
        let tail = members.pop().unwrap();
        directions.pop();
        members[0].extend(tail);
        members[0].sort_unstable();
    }

    let a = alpha.radians();
    let m = directions.len();
    let mut adjacency = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if (direction_gap(directions[i], directions[j]) - a.min(PI - a)).abs() <= DIRECTION_TOLERANCE {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let components = components(&adjacency);
    let weights = members.iter().map(Vec::len).collect();
    Ok(DirectionGraph { directions, weights, members, adjacency, components })
}

fn components(adj: &[Vec<usize>]) -> Vec<Component> {
    let m = adj.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for &v in &adj[comp[k]] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        let cycle = comp.len() > 2 && comp.iter().all(|&v| adj[v].len() == 2);
        let first = if cycle {
            *comp.iter().min().unwrap()
        } else {
            *comp.iter().filter(|&&v| adj[v].len() <= 1).min().unwrap_or(&start)
        };
        let mut walk = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        loop {
            let next = adj[cur].iter().copied().filter(|&v| v != prev && v != first).min();
            match next {
                Some(v) if !walk.contains(&v) => {
                    walk.push(v);
                    prev = cur;
                    cur = v;
                }
                _ => break,
            }
        }
        let kind = if cycle { ComponentKind::Cycle } else { ComponentKind::Path };
        out.push(Component { kind, nodes: walk });
    }
    out
}

/// Whether two segments meet at a point that is not a vertex of the set.
/// Overlapping collinear segments do not cross.
pub fn segments_cross(s1: &Segment, s2: &Segment, vertices: &[Point]) -> bool {
    match segment_segment(s1, s2, POINT_TOLERANCE) {
        Meet::Points(ps) => ps.iter().any(|p| vertices.iter().all(|v| v.dist(*p) > POINT_TOLERANCE)),
        Meet::Overlap(_) => false,
    }
}

/// All crossing pairs; errors when one of them crosses at an angle other
/// than α.
pub fn crossing_pairs(set: &SegmentSet, alpha: AngleSpec) -> Result<Vec<(usize, usize)>, AnglesError> {
    let a = alpha.radians();
    let want = a.min(PI - a);
    let s = &set.segments;
    let mut out = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if segments_cross(&s[i], &s[j], &set.vertices) {
                let got = direction_gap(s[i].direction().angle(), s[j].direction().angle());
                if (got - want).abs() > DIRECTION_TOLERANCE {
                    return Err(AnglesError::WrongAngle(i, j, got));
                }
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

fn verify(set: &SegmentSet, class: &[usize]) -> Result<(), AnglesError> {
    for (k, &i) in class.iter().enumerate() {
        for &j in &class[k + 1..] {
            if segments_cross(&set.segments[i], &set.segments[j], &set.vertices) {
                return Err(AnglesError::Unverified(i.min(j), i.max(j)));
            }
        }
    }
    Ok(())
}

/// Nodes of an odd cycle chosen by the best rotation of `{0, 2, …, 2k-2}`.
fn odd_cycle_pick(g: &DirectionGraph, walk: &[usize]) -> Vec<usize> {
    let len = walk.len();
    let k = len / 2;
    let pick = |r: usize| -> Vec<usize> { (0..k).map(|i| walk[(r + 2 * i) % len]).collect() };
    let weight = |nodes: &[usize]| nodes.iter().map(|&v| g.weights[v]).sum::<usize>();
    let best = (0..len).max_by_key(|&r| (weight(&pick(r)), std::cmp::Reverse(r))).unwrap_or(0);
    pick(best)
}

fn is_odd_cycle(c: &Component) -> bool {
    c.kind == ComponentKind::Cycle && c.nodes.len() % 2 == 1
}

/// Chosen direction nodes per component, in component order.
pub fn select_nodes(g: &DirectionGraph) -> Vec<Vec<usize>> {
    g.components
        .iter()
        .map(|c| {
            if is_odd_cycle(c) {
                return odd_cycle_pick(g, &c.nodes);
            }
            let class = |parity| c.nodes.iter().copied().skip(parity).step_by(2).collect::<Vec<_>>();
            let (even, odd) = (class(0), class(1));
            let w = |s: &[usize]| s.iter().map(|&v| g.weights[v]).sum::<usize>();
            if w(&odd) > w(&even) {
                odd
            } else {
                even
            }
        })
        .collect()
}

/// A pairwise noncrossing subset of the segments, as sorted indices.
pub fn select_noncrossing(set: &SegmentSet, alpha: AngleSpec) -> Result<Vec<usize>, AnglesError> {
    crossing_pairs(set, alpha)?;
    let g = build_direction_graph(set, alpha)?;
    let mut out: Vec<usize> =
        select_nodes(&g).into_iter().flatten().flat_map(|v| g.members[v].iter().copied()).collect();
    out.sort_unstable();
    verify(set, &out)?;
    Ok(out)
}

/// At most three pairwise noncrossing classes covering the segments.
pub fn partition_noncrossing(set: &SegmentSet, alpha: AngleSpec) -> Result<Vec<Vec<usize>>, AnglesError> {
    crossing_pairs(set, alpha)?;
    let g = build_direction_graph(set, alpha)?;
    let mut classes = vec![Vec::new(); 3];
    for c in &g.components {
        let last = c.nodes.len() - 1;
        for (pos, &v) in c.nodes.iter().enumerate() {
            let color = if is_odd_cycle(c) && pos == last { 2 } else { pos % 2 };
            classes[color].extend(g.members[v].iter().copied());
        }
    }
    classes.retain(|c| !c.is_empty());
    for c in &mut classes {
        c.sort_unstable();
        verify(set, c)?;
    }
    Ok(classes)
}
