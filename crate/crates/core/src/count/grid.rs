//! The plain `n x m` grid: no shifts, `R ≤ D4`, or `R ≤ D8` when square.

use super::{burnside_average, check_element, exact, sum_over_group, tpow, FixedPointCount};
use crate::error::Result;
use crate::group::{DihedralElement, GridShape, SymmetryGroup};
use crate::tileset::FixedDesignTable;
use DihedralElement::*;

/// Tilings of the `n x m` grid fixed by `g ∈ D4`.
pub fn fxpt_rect_grid(
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    check_element(g, &GridShape::grid(n, m)?, t)?;
    let id = t.t(Id);
    let nm = n * m;
    let v = match g {
        Id => tpow(id, nm),
        R2 if nm.is_multiple_of(2) => tpow(id, nm / 2),
        // single centre cell
        R2 => tpow(id, (nm - 1) / 2) * t.t(R2),
        F if n.is_multiple_of(2) => tpow(id, nm / 2),
        // middle column fixed
        F => tpow(id, exact(m * (n - 1), 2)) * tpow(t.t(F), m),
        R2F if m.is_multiple_of(2) => tpow(id, nm / 2),
        // middle row fixed
        R2F => tpow(id, exact(n * (m - 1), 2)) * tpow(t.t(R2F), n),
        R | R3 | RF | R3F => unreachable!("rejected by check_element"),
    };
    Ok(v)
}

/// Tilings of the `n x n` grid fixed by `g ∈ D8`.
pub fn fxpt_square_grid(
    g: DihedralElement,
    n: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    check_element(g, &GridShape::grid(n, n)?, t)?;
    let id = t.t(Id);
    let sq = n * n;
    let even = n.is_multiple_of(2);
    let v = match g {
        Id => tpow(id, sq),
        R2 | F | R2F if even => tpow(id, sq / 2),
        R2 => tpow(id, (sq - 1) / 2) * t.t(R2),
        F | R2F => tpow(id, exact(sq - n, 2)) * tpow(t.t(g), n),
        // quarter turns: all 4-cycles, plus the centre when n is odd
        R | R3 if even => tpow(id, exact(sq, 4)),
        R | R3 => tpow(id, exact(sq - 1, 4)) * t.t(g),
        // diagonal or antidiagonal fixed
        RF | R3F => tpow(id, exact(sq - n, 2)) * tpow(t.t(g), n),
    };
    Ok(v)
}

/// Dispatches to the square formulas when `n == m`.
pub fn fxpt_grid(
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    if n == m {
        fxpt_square_grid(g, n, t)
    } else {
        fxpt_rect_grid(g, n, m, t)
    }
}

/// Distinct tilings of the `n x m` grid up to `group`.
pub fn count_grid(
    n: usize,
    m: usize,
    group: SymmetryGroup,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    let shape = GridShape::grid(n, m)?;
    let sum = sum_over_group(group, &shape, t, |g| fxpt_grid(g, n, m, t))?;
    burnside_average(sum, group.order() as u64)
}
