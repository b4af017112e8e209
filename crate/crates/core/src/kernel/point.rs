use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub const fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(T::zero(), T::zero())
    }

    pub fn from_angle(theta: T) -> Self {
        Point2::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }

    pub fn normalized(self) -> Self {
        self * (T::one() / self.norm())
    }

    /// Counterclockwise normal.
    pub fn perp(self) -> Self {
        Point2::new(-self.y, self.x)
    }

    pub fn midpoint(self, o: Self) -> Self {
        (self + o) * T::lit(0.5)
    }

    pub fn lerp(self, o: Self, t: T) -> Self {
        self + (o - self) * t
    }

    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn rotated(self, theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn cast<U: Scalar>(self) -> Point2<U> {
        Point2::new(U::from_f64(self.x.to_f64().unwrap()).unwrap(), U::from_f64(self.y.to_f64().unwrap()).unwrap())
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for Point2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for Point2<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Point2::new(self.x * s, self.y * s)
    }
}

impl<T: Scalar> Neg for Point2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point2::new(-self.x, -self.y)
    }
}

/// Signed side of `p` relative to the directed line `a → b`: positive on the
/// left, normalized by `|ab|` so it is a distance.
pub fn signed_distance<T: Scalar>(a: Point2<T>, b: Point2<T>, p: Point2<T>) -> T {
    (b - a).cross(p - a) / a.dist(b)
}

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_tau<T: Scalar>(theta: T) -> T {
    let tau = T::TAU();
    let r = theta % tau;
    if r < T::zero() {
        r + tau
    } else {
        r
    }
}

/// Reduces an angle to `[0, π)`.
pub fn wrap_pi<T: Scalar>(theta: T) -> T {
    let pi = T::PI();
    let r = theta % pi;
    let r = if r < T::zero() { r + pi } else { r };
    if r >= pi {
        T::zero()
    } else {
        r
    }
}
