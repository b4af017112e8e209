use super::{midpoint_bends, out_of_range, ConstructError};
use crate::kernel::Drawing;
use crate::{AngleSpec, Point, Side};

/// Triangular grid section with `m` points per side; every unit edge becomes
/// an empty lens of two α-bend edges.
pub fn grid_construction(m: usize, alpha: AngleSpec) -> Result<Drawing, ConstructError> {
    if m < 2 {
        return Err(ConstructError::TooFewPoints { need: 2, got: m });
    }
    if alpha.cmp_frac_pi(2, 3).is_le() {
        return Err(out_of_range(alpha, "(2π/3, π)"));
    }
    let h = 3f64.sqrt() / 2.0;
    let mut index = vec![vec![0; m]; m];
    let mut vertices = Vec::new();
    for (r, row) in index.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().take(m - r).enumerate() {
            *slot = vertices.len();
            vertices.push(Point::new(c as f64 + r as f64 / 2.0, r as f64 * h));
        }
    }
    let mut pairs = Vec::new();
    for r in 0..m {
        for c in 0..m - r {
            let here = index[r][c];
            let mut next = Vec::new();
            if c + 1 < m - r {
                next.push(index[r][c + 1]);
            }
            if r + 1 < m && c < m - r - 1 {
                next.push(index[r + 1][c]);
            }
            if r + 1 < m && c >= 1 {
                next.push(index[r + 1][c - 1]);
            }
            for v in next {
                pairs.push((here, v, Side::Left));
                pairs.push((here, v, Side::Right));
            }
        }
    }
    midpoint_bends(alpha, vertices, &pairs)
}
