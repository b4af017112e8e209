//! Fixed-angle arcs and the bend points that live on them.
//!
//! For a chord `a → c` and `side` the arc is the part of the circle of
//! radius `|ac| / (2 sin α)` lying in the closed halfplane `side` of the
//! chord. Its central angle is `2(π − α)` and every interior point sees the
//! chord under the angle `α`.

use serde::{Deserialize, Serialize};

use super::point::{wrap_tau, Point2};
use super::KernelError;
use crate::scalar::Scalar;

/// Halfplane of a directed chord `u → v`; `Left` is `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Left => 1,
            Side::Right => -1,
        }
    }

    pub fn from_sign(s: i64) -> Option<Side> {
        match s {
            1 => Some(Side::Left),
            -1 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn scalar<T: Scalar>(self) -> T {
        T::lit(self.sign() as f64)
    }

    /// Side of `p` w.r.t. `a → c`, `None` when within `eps` of the line.
    pub fn of_point<T: Scalar>(a: Point2<T>, c: Point2<T>, p: Point2<T>, eps: T) -> Option<Side> {
        let d = super::point::signed_distance(a, c, p);
        if d > eps {
            Some(Side::Left)
        } else if d < -eps {
            Some(Side::Right)
        } else {
            None
        }
    }
}

/// Circle data of an α-arc between two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcGeometry<T> {
    pub start: Point2<T>,
    pub end: Point2<T>,
    pub side: Side,
    pub center: Point2<T>,
    pub radius: T,
    /// Polar angle of `start` around `center`.
    pub start_angle: T,
    /// Signed sweep from `start` to `end`; negative means clockwise.
    pub sweep: T,
}

impl<T: Scalar> ArcGeometry<T> {
    pub fn central_angle(&self) -> T {
        self.sweep.abs()
    }

    /// The point at parameter `t ∈ [0, 1]` (by angle) from `start` to `end`.
    pub fn point_at(&self, t: T) -> Point2<T> {
        if t <= T::zero() {
            return self.start;
        }
        if t >= T::one() {
            return self.end;
        }
        self.center + Point2::from_angle(self.start_angle + self.sweep * t) * self.radius
    }

    /// Parameter of a point on the circle, measured along the arc from
    /// `start`; values above 1 mean the point is off the arc.
    pub fn parameter_of(&self, p: Point2<T>) -> T {
        let theta = (p - self.center).angle();
        let dir = if self.sweep < T::zero() { -T::one() } else { T::one() };
        wrap_tau(dir * (theta - self.start_angle)) / self.central_angle()
    }

    /// Whether `p` lies on the closed arc, within `eps`.
    pub fn contains(&self, p: Point2<T>, eps: T) -> bool {
        if (p.dist(self.center) - self.radius).abs() > eps {
            return false;
        }
        if p.dist(self.start) <= eps || p.dist(self.end) <= eps {
            return true;
        }
        let d = super::point::signed_distance(self.start, self.end, p) * self.side.scalar();
        d >= -eps
    }

    /// Midpoint of the arc (`t = 1/2`).
    pub fn apex(&self) -> Point2<T> {
        self.point_at(T::lit(0.5))
    }

    /// Area of the region between the chord and the arc.
    pub fn cap_area(&self) -> T {
        let theta = self.central_angle();
        self.radius * self.radius * T::lit(0.5) * (theta - theta.sin())
    }

    /// Whether `p` lies strictly inside the region bounded by the chord and
    /// the arc, with margin `eps`.
    pub fn cap_contains(&self, p: Point2<T>, eps: T) -> bool {
        let d = super::point::signed_distance(self.start, self.end, p) * self.side.scalar();
        d > eps && p.dist(self.center) < self.radius - eps
    }
}

/// Builds the α-arc from `a` to `c` on `side`.
pub fn make_arc_edge<T: Scalar>(
    a: Point2<T>,
    c: Point2<T>,
    side: Side,
    alpha: T,
) -> Result<ArcGeometry<T>, KernelError> {
    let chord = c - a;
    let len = chord.norm();
    if !(len > T::zero()) {
        return Err(KernelError::CoincidentEndpoints);
    }
    let radius = len / (T::lit(2.0) * alpha.sin());
    let normal = chord.perp() * (side.scalar::<T>() / len);
    let center = a.midpoint(c) + normal * (radius * alpha.cos());
    let start_angle = (a - center).angle();
    let sweep = -side.scalar::<T>() * T::lit(2.0) * (T::PI() - alpha);
    Ok(ArcGeometry { start: a, end: c, side, center, radius, start_angle, sweep })
}

/// The bend point at parameter `t ∈ (0, 1)` along the α-arc from `a` to `c`.
pub fn bend_point_on_arc<T: Scalar>(
    a: Point2<T>,
    c: Point2<T>,
    side: Side,
    alpha: T,
    t: T,
) -> Result<Point2<T>, KernelError> {
    if !(t > T::zero() && t < T::one()) {
        return Err(KernelError::ParameterOutOfRange(t.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(make_arc_edge(a, c, side, alpha)?.point_at(t))
}

/// The bend point whose first segment leaves `a` at angle `phi` from the
/// chord `a → c`, turning toward `side`. `phi` must lie in `(0, π − α)`.
pub fn bend_with_start_angle<T: Scalar>(
    a: Point2<T>,
    c: Point2<T>,
    side: Side,
    alpha: T,
    phi: T,
) -> Result<Point2<T>, KernelError> {
    let t = T::one() - phi / (T::PI() - alpha);
    bend_point_on_arc(a, c, side, alpha, t)
}

/// Angle at `b` between `b → a` and `b → c`, in `[0, π]`.
pub fn angle_at_bend<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Result<T, KernelError> {
    let u = a - b;
    let v = c - b;
    if u.norm() == T::zero() || v.norm() == T::zero() {
        return Err(KernelError::DegenerateBend);
    }
    Ok(u.cross(v).abs().atan2(u.dot(v)))
}
