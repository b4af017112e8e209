//! The fixed angle of a drawing.
//!
//! Rationality of `α/π` is always declared by the caller and never inferred
//! from a floating point value.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AngleError {
    #[error("angle must lie strictly between 0 and pi, got {0}")]
    OutOfRange(f64),
    #[error("rational angle needs positive numerator and denominator (got {q}/{p})")]
    NonPositive { q: i64, p: i64 },
    #[error("cannot parse angle {0:?}: expected `q/p pi`, `pi`, or `rad:<x>`")]
    Parse(String),
    #[error("radian angle {0:?} must be declared irrational (pass --irrational)")]
    Undeclared(String),
}

/// The angle `α` of the edges. `Rational { q, p }` is `α = (q/p)·π` with
/// `gcd(p, q) = 1`; `Irrational` carries a radian value whose ratio to `π`
/// the caller declares irrational.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AngleDoc", into = "AngleDoc")]
pub enum AngleSpec {
    Rational { q: u32, p: u32 },
    Irrational { radians: f64 },
}

/// JSON form of an angle: `{"pi_num": q, "pi_den": p}` or
/// `{"radians": x, "irrational": true}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AngleDoc {
    Rational(RationalDoc),
    Irrational(IrrationalDoc),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDoc {
    pub pi_num: i64,
    pub pi_den: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrrationalDoc {
    pub radians: f64,
    pub irrational: bool,
}

impl TryFrom<AngleDoc> for AngleSpec {
    type Error = AngleError;

    fn try_from(doc: AngleDoc) -> Result<Self, AngleError> {
        match doc {
            AngleDoc::Rational(r) => AngleSpec::rational(r.pi_num, r.pi_den),
            AngleDoc::Irrational(IrrationalDoc { radians, irrational: true }) => AngleSpec::irrational(radians),
            AngleDoc::Irrational(IrrationalDoc { radians, .. }) => Err(AngleError::Undeclared(radians.to_string())),
        }
    }
}

impl From<AngleSpec> for AngleDoc {
    fn from(a: AngleSpec) -> Self {
        match a {
            AngleSpec::Rational { q, p } => AngleDoc::Rational(RationalDoc { pi_num: q as i64, pi_den: p as i64 }),
            AngleSpec::Irrational { radians } => AngleDoc::Irrational(IrrationalDoc { radians, irrational: true }),
        }
    }
}

/// How `π/α` decomposes, which drives the segment-selection ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiRatio {
    Irrational,
    /// `π/α = p/q` with `p` even.
    EvenNumerator {
        p: u32,
    },
    /// `π/α = p/q` with `p = 2k + 1`.
    OddNumerator {
        k: u32,
    },
}

impl AngleSpec {
    pub fn rational(q: i64, p: i64) -> Result<Self, AngleError> {
        if q <= 0 || p <= 0 {
            return Err(AngleError::NonPositive { q, p });
        }
        let g = gcd(q as u64, p as u64) as i64;
        let (q, p) = (q / g, p / g);
        if q >= p {
            return Err(AngleError::OutOfRange(q as f64 / p as f64 * PI));
        }
        Ok(AngleSpec::Rational { q: q as u32, p: p as u32 })
    }

    pub fn irrational(radians: f64) -> Result<Self, AngleError> {
        if !(radians > 0.0 && radians < PI) || !radians.is_finite() {
            return Err(AngleError::OutOfRange(radians));
        }
        Ok(AngleSpec::Irrational { radians })
    }

    /// `(q/p)·π` shorthand for tests and constructions; panics on bad input.
    pub fn frac_pi(q: i64, p: i64) -> Self {
        Self::rational(q, p).expect("valid rational angle")
    }

    pub fn radians(&self) -> f64 {
        self.radians_as::<f64>()
    }

    pub fn radians_as<T: Scalar>(&self) -> T {
        match *self {
            AngleSpec::Rational { q, p } => T::PI() * T::lit(q as f64) / T::lit(p as f64),
            AngleSpec::Irrational { radians } => T::lit(radians),
        }
    }

    /// The supplementary angle `π − α`.
    pub fn supplement(&self) -> Self {
        match *self {
            AngleSpec::Rational { q, p } => AngleSpec::Rational { q: p - q, p },
            AngleSpec::Irrational { radians } => AngleSpec::Irrational { radians: PI - radians },
        }
    }

    pub fn half(&self) -> Self {
        match *self {
            AngleSpec::Rational { q, p } => Self::rational(q as i64, 2 * p as i64).unwrap(),
            AngleSpec::Irrational { radians } => AngleSpec::Irrational { radians: radians / 2.0 },
        }
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self, AngleSpec::Irrational { .. })
    }

    pub fn pi_ratio(&self) -> PiRatio {
        match *self {
            AngleSpec::Irrational { .. } => PiRatio::Irrational,
            AngleSpec::Rational { p, .. } if p % 2 == 0 => PiRatio::EvenNumerator { p },
            AngleSpec::Rational { p, .. } => PiRatio::OddNumerator { k: (p - 1) / 2 },
        }
    }

    /// Compares `α` with `(num/den)·π`; exact for rational angles.
    pub fn cmp_frac_pi(&self, num: u32, den: u32) -> Ordering {
        match *self {
            AngleSpec::Rational { q, p } => Ratio::new(q as u64, p as u64).cmp(&Ratio::new(num as u64, den as u64)),
            AngleSpec::Irrational { radians } => {
                // an irrational multiple of pi never equals a rational one
                let other = PI * num as f64 / den as f64;
                if radians < other {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn is_frac_pi(&self, num: u32, den: u32) -> bool {
        self.cmp_frac_pi(num, den) == Ordering::Equal
    }

    /// Parses `q/p pi`, `q/ppi`, `pi/p`, or `rad:<x>` (the latter only when
    /// `irrational` is declared).
    pub fn parse(text: &str, irrational: bool) -> Result<Self, AngleError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(x) = t.strip_prefix("rad:") {
            if !irrational {
                return Err(AngleError::Undeclared(text.to_string()));
            }
            let r = f64::from_str(x).map_err(|_| AngleError::Parse(text.to_string()))?;
            return Self::irrational(r);
        }
        let body =
            t.strip_suffix("pi").or_else(|| t.strip_suffix('π')).ok_or_else(|| AngleError::Parse(text.to_string()))?;
        let body = body.strip_suffix('*').unwrap_or(body);
        let (q, p) = match body.split_once('/') {
            Some((q, p)) => (q, p),
            None if body.is_empty() => ("1", "1"),
            None => (body, "1"),
        };
        let q = if q.is_empty() { "1" } else { q };
        let q = i64::from_str(q).map_err(|_| AngleError::Parse(text.to_string()))?;
        let p = i64::from_str(p).map_err(|_| AngleError::Parse(text.to_string()))?;
        Self::rational(q, p)
    }
}

impl fmt::Display for AngleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleSpec::Rational { q, p } => write!(f, "{q}/{p}pi"),
            AngleSpec::Irrational { radians } => write!(f, "rad:{radians}"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
