#![allow(dead_code)]

use std::f64::consts::PI;

use fap::acgraph::{extract_red_graph, select_red_subset, validate_ac_drawing, AcDrawing, AcEdge, RedClass, Tier};
use fap::kernel::angle_at_bend;
use fap::kernel::perturb::conflict_pairs;
use fap::{AngleSpec, Point};
use fap::{Drawing, Edge};
use rand::Rng;

/// Segment directions whose pairwise line angles are all `min(α, π − α)`.
pub fn crossing_directions(alpha: AngleSpec) -> Vec<f64> {
    if alpha.is_frac_pi(1, 3) {
        vec![0.0, PI / 3.0, 2.0 * PI / 3.0]
    } else {
        vec![0.0, alpha.radians()]
    }
}

fn line_meet(p: Point, d: Point, q: Point, e: Point) -> Option<Point> {
    let den = d.cross(e);
    if den.abs() < 1e-9 {
        return None;
    }
    let t = (q - p).cross(e) / den;
    Some(p + d * t)
}

/// A random valid drawing with one-bend edges whose crossings are all at α.
/// Each bend is where lines through `u` and `v` with two distinct allowed
/// directions meet; edges that break validity are dropped.
pub fn random_ac_drawing<R: Rng>(rng: &mut R, n: usize, alpha: AngleSpec, attempts: usize) -> AcDrawing {
    let mut vertices: Vec<Point> = Vec::new();
    while vertices.len() < n {
        let q = Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0));
        if vertices.iter().all(|v| v.dist(q) > 0.8) {
            vertices.push(q);
        }
    }
    let dirs = crossing_directions(alpha);
    let mut d = AcDrawing { alpha, vertices, edges: Vec::new() };
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || d.edges.iter().any(|e| (e.u.min(e.v), e.u.max(e.v)) == (u.min(v), u.max(v))) {
            continue;
        }
        let i = rng.gen_range(0..dirs.len());
        let j = (i + rng.gen_range(1..dirs.len())) % dirs.len();
        let (pu, pv) = (d.vertices[u], d.vertices[v]);
        let Some(bend) = line_meet(pu, Point::from_angle(dirs[i]), pv, Point::from_angle(dirs[j])) else { continue };
        if !(-5.0..15.0).contains(&bend.x) || !(-5.0..15.0).contains(&bend.y) {
            continue;
        }
        if bend.dist(pu) < 0.2 || bend.dist(pv) < 0.2 {
            continue;
        }
        d.edges.push(AcEdge { u, v, bend });
        if !validate_ac_drawing(&d).valid {
            d.edges.pop();
        }
    }
    d
}

/// Whether two segments cross at a point interior to both.
pub fn proper_cross(a: (Point, Point), b: (Point, Point)) -> bool {
    let orient = |p: Point, q: Point, r: Point| (q - p).cross(r - p);
    let o1 = orient(a.0, a.1, b.0);
    let o2 = orient(a.0, a.1, b.1);
    let o3 = orient(b.0, b.1, a.0);
    let o4 = orient(b.0, b.1, a.1);
    let tol = 1e-12;
    o1 * o2 < -tol && o3 * o4 < -tol
}

/// A random triangle with one α-bend edge inside each side, or `None` when no
/// sampled bend of some side falls inside the triangle.
pub fn random_obstruction_instance<R: Rng>(rng: &mut R, alpha: AngleSpec) -> Option<([Point; 3], [Point; 3])> {
    use fap::kernel::bend_point_on_arc;
    use fap::Side;
    let tri: [Point; 3] = std::array::from_fn(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)));
    let area = (tri[1] - tri[0]).cross(tri[2] - tri[0]).abs();
    if area < 0.5 {
        return None;
    }
    let mut bends = [Point::origin(); 3];
    for k in 0..3 {
        let (a, c, w) = (tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]);
        let side = Side::of_point(a, c, w, 1e-9)?;
        let inside = |b: Point| {
            (0..3).all(|j| {
                let (s, t, o) = (tri[j], tri[(j + 1) % 3], tri[(j + 2) % 3]);
                (t - s).cross(b - s) * (t - s).cross(o - s) > 1e-9 * (t - s).norm().powi(2)
            })
        };
        bends[k] = (0..32)
            .filter_map(|_| bend_point_on_arc(a, c, side, alpha.radians(), rng.gen_range(0.02..0.98)).ok())
            .find(|&b| inside(b))?;
    }
    Some((tri, bends))
}

/// A random valid plane multigraph of arc lenses: pairs get both arcs when
/// the drawing stays valid.
pub fn random_lens_drawing<R: Rng>(rng: &mut R, n: usize, alpha: AngleSpec) -> fap::Drawing {
    use fap::validate::{validate_drawing, Mode};
    use fap::{Drawing, Edge, Side};
    let pts: Vec<Point> = (0..n).map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0))).collect();
    let mut d = Drawing::new(alpha, pts, Vec::new()).unwrap();
    for _ in 0..4 * n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || d.edges.iter().any(|e| e.pair() == (u.min(v), u.max(v))) {
            continue;
        }
        let mut next = d.clone();
        next.edges.push(Edge::arc(u, v, Side::Left));
        next.edges.push(Edge::arc(u, v, Side::Right));
        if validate_drawing(&next, Mode::Multigraph).valid {
            d = next;
        }
    }
    d
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

pub struct Outcome {
    pub tier1: bool,
    pub overlaps: bool,
}

/// Checks the red-graph invariants on one drawing.
pub fn check_pipeline(d: &AcDrawing) -> Result<Outcome, String> {
    let alpha = d.alpha;
    let n = d.vertices.len();
    ensure(validate_ac_drawing(d).valid, "input drawing is invalid")?;
    let red = extract_red_graph(d).map_err(|e| e.to_string())?;

    let crossing_segments = d
        .segment_refs()
        .filter(|&s| {
            let a = d.segment(s);
            d.segment_refs().any(|t| t.0 != s.0 && proper_cross((a.a, a.b), (d.segment(t).a, d.segment(t).b)))
        })
        .count();
    ensure(
        red.edges.len() == crossing_segments,
        format!("|Γ| = {} but {crossing_segments} crossing segments", red.edges.len()),
    )?;

    let a = alpha.radians();
    for e in &red.edges {
        let angle = angle_at_bend(d.vertices[e.from], e.bend, d.vertices[e.to]).map_err(|e| e.to_string())?;
        let want = if e.class == RedClass::AlphaBend { a } else { std::f64::consts::PI - a };
        ensure((angle - want).abs() < 1e-9, format!("bend angle {angle} vs {want}"))?;
    }

    let sel = select_red_subset(&red, alpha).map_err(|e| e.to_string())?;
    let (num, den) = sel.ratio;
    ensure(sel.kept.len() * den >= num * red.edges.len(), format!("kept {} of {}", sel.kept.len(), red.edges.len()))?;
    ensure(sel.report.valid, "selection is not plane")?;
    ensure(sel.layers[0].edges.len() <= 4 * n - 6, format!("{} α-bend edges for n = {n}", sel.layers[0].edges.len()))?;

    let raw: Vec<Drawing> = sel
        .layers
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let edges = sel
                .kept
                .iter()
                .map(|&i| red.edges[i])
                .filter(|e| (e.class == RedClass::AlphaBend) == (k == 0))
                .map(|e| Edge::bend(e.from, e.to, e.bend))
                .collect();
            Drawing::new(l.alpha, d.vertices.clone(), edges).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    Ok(Outcome { tier1: red.count(Tier::Gamma1) > 0, overlaps: !conflict_pairs(&raw).is_empty() })
}
