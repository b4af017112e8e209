//! Edge-count bounds for αAC₁⁼ graphs and for α-arc / α-bend (multi)graphs.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::AcError;
use crate::{AngleSpec, PiRatio};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    TheoremAc,
    LemmaAc,
}

/// Which case of the statement a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AcCase {
    I,
    Ii,
    Iii,
    Iv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcBound {
    pub variant: Variant,
    pub case: AcCase,
    /// `slope * n + offset`.
    #[serde(serialize_with = "ratio_str")]
    pub slope: Ratio<i64>,
    #[serde(serialize_with = "ratio_str")]
    pub offset: Ratio<i64>,
    #[serde(serialize_with = "ratio_str")]
    pub value: Ratio<i64>,
    pub floor: i64,
    pub note: Option<String>,
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn linear(slope: (i64, i64), offset: (i64, i64)) -> (Ratio<i64>, Ratio<i64>) {
    (Ratio::new(slope.0, slope.1), Ratio::new(offset.0, offset.1))
}

/// Every case of the statement that applies to `alpha`, as `(case, slope, offset)`.
pub fn applicable_cases(alpha: AngleSpec, variant: Variant) -> Vec<(AcCase, Ratio<i64>, Ratio<i64>)> {
    let third = alpha.cmp_frac_pi(1, 3);
    let half = alpha.cmp_frac_pi(1, 2);
    let even_or_irrational = !matches!(alpha.pi_ratio(), PiRatio::OddNumerator { .. });
    let mut out = Vec::new();
    let mut push = |case, s: (i64, i64), o: (i64, i64)| {
        let (a, b) = linear(s, o);
        out.push((case, a, b));
    };
    match variant {
        Variant::TheoremAc => {
            if third.is_eq() {
                push(AcCase::I, (21, 1), (-36, 1));
            }
            if third.is_lt() {
                push(AcCase::Ii, (37, 2), (-34, 1));
            }
            if third.is_gt() && half.is_le() {
                push(AcCase::Iii, (33, 2), (-31, 1));
            }
            if even_or_irrational {
                push(AcCase::Iv, (16, 1), (-30, 1));
            }
        }
        Variant::LemmaAc => {
            push(AcCase::I, (15, 1), (-27, 1));
            if third.is_le() {
                push(AcCase::Ii, (12, 1), (-18, 1));
            }
            if third.is_gt() && half.is_lt() {
                push(AcCase::Iii, (10, 1), (-15, 1));
            }
            if even_or_irrational {
                push(AcCase::Iv, (10, 1), (-18, 1));
            }
        }
    }
    out
}

/// The smallest applicable bound on the number of edges.
pub fn ac_upper_bound(n: usize, alpha: AngleSpec, variant: Variant) -> Result<AcBound, AcError> {
    if n < 3 {
        return Err(AcError::TooFewVertices(n));
    }
    if alpha.cmp_frac_pi(1, 2).is_gt() {
        return Err(AcError::AngleRange(alpha));
    }
    let nn = Ratio::from_integer(n as i64);
    let (case, slope, offset) = applicable_cases(alpha, variant)
        .into_iter()
        .min_by(|a, b| (a.1 * nn + a.2).cmp(&(b.1 * nn + b.2)))
        .expect("case (i) or a specific case always applies");
    let value = slope * nn + offset;
    let note = alpha
        .is_frac_pi(1, 2)
        .then(|| "for α = π/2 (RAC₁ graphs) an asymptotically tight bound of 5.5n − O(1) is known".to_string());
    Ok(AcBound { variant, case, slope, offset, value, floor: value.floor().to_integer(), note })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum BoundValue {
    Exact(i64),
    /// An asymptotic form such as `6n − O(√n)`.
    Asymptotic(String),
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Asymptotic(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Tight,
    Gap,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub quantity: &'static str,
    pub lower: BoundValue,
    pub upper: BoundValue,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsTable {
    pub n: usize,
    pub alpha: AngleSpec,
    pub rows: Vec<BoundRow>,
    pub notes: Vec<String>,
}

impl BoundsTable {
    pub fn row(&self, quantity: &str) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.quantity == quantity)
    }
}

/// Known bounds on `M_b`, `M_a`, `M_b∥`, `M_a∥` for `n` points and angle α.
pub fn bounds_table(n: usize, alpha: AngleSpec) -> BoundsTable {
    let n_ = n as i64;
    let exact = BoundValue::Exact;
    let tight = |quantity, v: i64| BoundRow { quantity, lower: exact(v), upper: exact(v), status: Status::Tight };
    let gap =
        |quantity, lo: BoundValue, hi: i64| BoundRow { quantity, lower: lo, upper: exact(hi), status: Status::Gap };
    let dense = || BoundValue::Asymptotic("6n − O(√n)".into());

    let mut rows = vec![tight("M_b", 3 * n_ - 6)];
    rows.push(if alpha.cmp_frac_pi(1, 2).is_ge() {
        tight("M_a", 3 * n_ - 6)
    } else {
        gap("M_a", exact(2 * n_ - 3), 3 * n_ - 6)
    });
    rows.push(if alpha.cmp_frac_pi(2, 3).is_le() {
        tight("M_b_multi", 4 * n_ - 6)
    } else {
        gap("M_b_multi", dense(), 6 * n_ - 12)
    });
    rows.push(if alpha.cmp_frac_pi(1, 2).is_lt() {
        gap("M_a_multi", exact(2 * n_ - 2), 4 * n_ - 6)
    } else if alpha.cmp_frac_pi(5, 6).is_le() {
        tight("M_a_multi", 4 * n_ - 6)
    } else {
        gap("M_a_multi", dense(), 6 * n_ - 12)
    });
    let mut notes = Vec::new();
    if alpha.cmp_frac_pi(2, 3).is_gt() && alpha.cmp_frac_pi(5, 6).is_le() {
        notes.push("for α ∈ (2π/3, 5π/6] only the arc multigraph bound is tight".to_string());
    }
    BoundsTable { n, alpha, rows, notes }
}
