//! Intersection primitives for segments and circles.

use super::point::Point2;
use super::KernelError;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<T> {
    pub a: Point2<T>,
    pub b: Point2<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point2<T>, b: Point2<T>) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> T {
        self.a.dist(self.b)
    }

    pub fn direction(&self) -> Point2<T> {
        self.b - self.a
    }

    /// Distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point2<T>) -> T {
        let d = self.direction();
        let len2 = d.dot(d);
        if len2 == T::zero() {
            return p.dist(self.a);
        }
        let t = ((p - self.a).dot(d) / len2).max(T::zero()).min(T::one());
        p.dist(self.a + d * t)
    }
}

/// Result of intersecting two curves pieces.
#[derive(Debug, Clone, PartialEq)]
pub enum Meet<T> {
    /// Finitely many common points.
    Points(Vec<Point2<T>>),
    /// A common sub-curve of positive length; carries a point inside it.
    Overlap(Point2<T>),
}

impl<T: Scalar> Meet<T> {
    pub fn none() -> Self {
        Meet::Points(Vec::new())
    }
}

pub fn segment_segment<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>, eps: T) -> Meet<T> {
    let d1 = s1.direction();
    let d2 = s2.direction();
    let l1 = d1.norm();
    let l2 = d2.norm();
    let denom = d1.cross(d2);
    let w = s2.a - s1.a;
    if denom.abs() <= l1 * l2 * eps * T::lit(1e-3) {
        // parallel
        if (d1.cross(w) / l1).abs() > eps {
            return Meet::none();
        }
        let ta = w.dot(d1) / (l1 * l1);
        let tb = (s2.b - s1.a).dot(d1) / (l1 * l1);
        let lo = ta.min(tb).max(T::zero());
        let hi = ta.max(tb).min(T::one());
        let overlap = (hi - lo) * l1;
        if overlap > eps {
            return Meet::Overlap(s1.a + d1 * ((lo + hi) * T::lit(0.5)));
        }
        if overlap >= -eps {
            return Meet::Points(vec![s1.a + d1 * ((lo + hi) * T::lit(0.5))]);
        }
        return Meet::none();
    }
    let t = w.cross(d2) / denom;
    let u = w.cross(d1) / denom;
    let (et, eu) = (eps / l1, eps / l2);
    if t < -et || t > T::one() + et || u < -eu || u > T::one() + eu {
        return Meet::none();
    }
    let t = t.max(T::zero()).min(T::one());
    Meet::Points(vec![s1.a + d1 * t])
}

/// Points of the closed segment on the circle `(center, r)`.
pub fn segment_circle<T: Scalar>(s: &Segment<T>, center: Point2<T>, r: T, eps: T) -> Vec<Point2<T>> {
    let d = s.direction();
    let len = d.norm();
    let f = s.a - center;
    let t0 = -f.dot(d) / (len * len);
    let foot = s.a + d * t0;
    let h = foot.dist(center);
    let mut ts = Vec::new();
    if h > r + eps {
        return Vec::new();
    } else if (h - r).abs() <= eps * T::lit(1e-3) {
        ts.push(t0);
    } else {
        let half = (r * r - h * h).max(T::zero()).sqrt() / len;
        ts.push(t0 - half);
        ts.push(t0 + half);
    }
    let et = eps / len;
    ts.into_iter()
        .filter(|&t| t >= -et && t <= T::one() + et)
        .map(|t| s.a + d * t.max(T::zero()).min(T::one()))
        .collect()
}

/// Second intersection of the line through `w` (direction `d`) with the circle
/// `(center, r)`, given that `w` lies on that circle.
pub fn second_line_circle_point<T: Scalar>(w: Point2<T>, d: Point2<T>, center: Point2<T>) -> Point2<T> {
    let t = -T::lit(2.0) * d.dot(w - center) / d.dot(d);
    w + d * t
}

#[derive(Debug, Clone, PartialEq)]
pub enum CircleMeet<T> {
    Same,
    Points(Vec<Point2<T>>),
}

pub fn circle_circle<T: Scalar>(c1: Point2<T>, r1: T, c2: Point2<T>, r2: T, eps: T) -> CircleMeet<T> {
    let d = c1.dist(c2);
    if d <= eps && (r1 - r2).abs() <= eps {
        return CircleMeet::Same;
    }
    if d > r1 + r2 + eps || d < (r1 - r2).abs() - eps || d == T::zero() {
        return CircleMeet::Points(Vec::new());
    }
    let a = (r1 * r1 - r2 * r2 + d * d) / (T::lit(2.0) * d);
    let u = (c2 - c1) * (T::one() / d);
    let base = c1 + u * a;
    let h2 = r1 * r1 - a * a;
    if h2 <= T::zero() {
        return CircleMeet::Points(vec![base]);
    }
    let h = h2.sqrt();
    CircleMeet::Points(vec![base + u.perp() * h, base - u.perp() * h])
}

/// Reflection of `w` across the line through `c1` and `c2`. When `w` is a
/// common point of two circles centred at `c1`, `c2` this is their other
/// common point.
pub fn reflect_across<T: Scalar>(w: Point2<T>, c1: Point2<T>, c2: Point2<T>) -> Point2<T> {
    let d = c2 - c1;
    let t = (w - c1).dot(d) / d.dot(d);
    let foot = c1 + d * t;
    foot * T::lit(2.0) - w
}

/// Acute-or-right angle between two crossing segments, in `(0, π/2]`.
pub fn crossing_angle<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>, eps: T) -> Result<T, KernelError> {
    match segment_segment(s1, s2, eps) {
        Meet::Points(p) if p.len() == 1 => {}
        _ => return Err(KernelError::NotCrossing),
    }
    let d1 = s1.direction();
    let d2 = s2.direction();
    let theta = d1.cross(d2).abs().atan2(d1.dot(d2));
    Ok(theta.min(T::PI() - theta))
}
