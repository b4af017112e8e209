use super::{find_collinear_triple, out_of_range, ConstructError};
use crate::kernel::{bend_with_start_angle, edges_cross, perturb_overlaps, Drawing, PerturbOptions};
use crate::{AngleSpec, Edge, Point, Side};

const HALVINGS: usize = 40;

/// Simple α-bend graph with at least `3n - 7` edges (exactly `3n - 6` when
/// the convex hull is a triangle), for `α ≤ π/2`.
pub fn diametric_construction(points: &[Point], alpha: AngleSpec) -> Result<Drawing, ConstructError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructError::TooFewPoints { need: 3, got: n });
    }
    if alpha.cmp_frac_pi(1, 2).is_gt() {
        return Err(out_of_range(alpha, "(0, π/2]"));
    }
    if let Some((i, j, k)) = find_collinear_triple(points) {
        return Err(ConstructError::CollinearTriple(i, j, k));
    }
    let (mut i0, mut i1, mut best) = (0, 1, -1.0);
    for i in 0..n {
        for j in i + 1..n {
            let d = points[i].dist(points[j]);
            if d > best {
                (i0, i1, best) = (i, j, d);
            }
        }
    }
    if points[i1].x < points[i0].x {
        std::mem::swap(&mut i0, &mut i1);
    }
    // Frame with p0 at the origin and p1 on the positive x-axis.
    let origin = points[i0];
    let turn = (points[i1] - origin).angle();
    let local: Vec<Point> = points.iter().map(|&p| (p - origin).rotated(-turn)).collect();
    let back = |q: Point| q.rotated(turn) + origin;
    let width = local[i1].x;

    let a = alpha.radians();
    let cot = a.cos() / a.sin();
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != i0 && i != i1).collect();
    rest.sort_by(|&i, &j| local[i].y.total_cmp(&local[j].y));

    let mut edges = Vec::new();
    for &i in &rest {
        let y = local[i].y;
        edges.push(Edge::bend(i0, i, back(Point::new(-y.abs() * cot, y))));
        edges.push(Edge::bend(i, i1, back(Point::new(width + y.abs() * cot, y))));
    }
    let mut drawing = perturb_overlaps(&Drawing::new(alpha, points.to_vec(), edges)?, &PerturbOptions::default())?;

    // p0 p1 with a long, almost horizontal segment at p0 on the emptier side.
    let above = rest.iter().filter(|&&i| local[i].y > 0.0).count();
    let side = if above <= rest.len() - above { Side::Left } else { Side::Right };
    let clearance = rest.iter().map(|&i| local[i].y.abs()).fold(f64::INFINITY, f64::min) / 2.0;
    let mut s = 0.125;
    for _ in 0..HALVINGS {
        let phi = s * (std::f64::consts::PI - a);
        let b =
            bend_with_start_angle(Point::origin(), Point::new(width, 0.0), side, a, phi).expect("valid start angle");
        let e = Edge::bend(i0, i1, back(b));
        if b.y.abs() < clearance && fits(&drawing, &e) {
            drawing.edges.push(e);
            break;
        }
        s /= 2.0;
    }

    // Strip edges between y-consecutive points on one side of p0 p1.
    for w in rest.windows(2) {
        let (i, j) = (w[0], w[1]);
        if (local[i].y > 0.0) != (local[j].y > 0.0) {
            continue;
        }
        let (far, near) = if local[i].y.abs() > local[j].y.abs() { (i, j) } else { (j, i) };
        let (pf, pn) = (local[far], local[near]);
        let chord = pn - pf;
        let flat = Point::new(chord.x.signum(), 0.0);
        let psi = flat.dot(chord.normalized()).clamp(-1.0, 1.0).acos();
        let Some(side) = Side::of_point(pf, pn, pf + flat, 0.0) else {
            continue;
        };
        let mut tilt = (psi / 8.0).min(0.05);
        for _ in 0..HALVINGS {
            if let Ok(b) = bend_with_start_angle(pf, pn, side, a, psi - tilt) {
                let e = Edge::bend(far, near, back(b));
                if fits(&drawing, &e) {
                    drawing.edges.push(e);
                    break;
                }
            }
            tilt /= 2.0;
        }
    }
    Ok(drawing)
}

fn fits(d: &Drawing, e: &Edge) -> bool {
    d.edge_defect(e).is_none() && d.edges.iter().all(|f| !edges_cross(f, e, d).conflicts())
}
