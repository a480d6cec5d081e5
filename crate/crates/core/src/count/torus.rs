//! The `n x m` torus: rows and columns shift, `R ≤ D4`, or `R ≤ D8` when square.
//!
//! Values are always summed over all `nm` shifts; per-shift counts are only
//! available from the oracle.

use super::{
    burnside_average, check_element, exact, exact_big, sum_over_group, tpow, FixedPointCount,
};
use crate::arith::{divisors, euler_phi, lcm};
use crate::error::Result;
use crate::group::{DihedralElement, GridShape, SymmetryGroup};
use crate::tileset::FixedDesignTable;
use num_bigint::BigUint;
use DihedralElement::*;

fn shift_only(n: usize, m: usize, id: u64) -> Result<BigUint> {
    let mut sum = BigUint::from(0u32);
    for c in divisors(m)?.iter() {
        for d in divisors(n)?.iter() {
            sum += tpow(id, n * m / lcm(c, d)) * (euler_phi(c)? * euler_phi(d)?);
        }
    }
    Ok(sum)
}

fn half_turn(n: usize, m: usize, id: u64, t_r2: u64) -> BigUint {
    let nm = n * m;
    match (n % 2, m % 2) {
        // a quarter of the shifts leave four fixed cells
        (0, 0) => {
            let none = tpow(id, nm / 2);
            let four = tpow(id, nm / 2 - 2) * tpow(t_r2, 4);
            exact_big((none * 3u32 + four) * nm, 4)
        }
        (1, 1) => tpow(id, (nm - 1) / 2) * t_r2 * nm,
        // half the shifts leave two fixed cells
        _ => {
            let none = tpow(id, nm / 2);
            let two = tpow(id, nm / 2 - 1) * tpow(t_r2, 2);
            exact_big((none + two) * nm, 2)
        }
    }
}

/// Mirror across the flipped axis of length `flip_len`; the other axis of
/// length `shift_len` only shifts. `reflection` is `f` or `r2f`.
fn mirror(
    flip_len: usize,
    shift_len: usize,
    reflection: DihedralElement,
    t: &FixedDesignTable,
) -> Result<BigUint> {
    let id = t.t(Id);
    let area = flip_len * shift_len;
    let mut sum = BigUint::from(0u32);
    for c in divisors(shift_len)?.iter() {
        let cycle = lcm(2, c);
        let fixed = t.t(reflection.pow(c));
        let term = if flip_len.is_multiple_of(2) {
            // half the flip offsets fix two lines, half fix none
            let none = tpow(id, exact(area, cycle));
            let two = tpow(id, exact((flip_len - 2) * shift_len, cycle))
                * tpow(fixed, exact(2 * shift_len, c));
            none + two
        } else {
            tpow(id, exact((flip_len - 1) * shift_len, cycle)) * tpow(fixed, shift_len / c)
        };
        sum += term * euler_phi(c)?;
    }
    if flip_len.is_multiple_of(2) {
        Ok(exact_big(sum * flip_len, 2))
    } else {
        Ok(sum * flip_len)
    }
}

/// Shift-summed count for `g ∈ D4` on the `n x m` torus.
pub fn fxpt_rect_torus(
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    check_element(g, &GridShape::torus(n, m)?, t)?;
    let id = t.t(Id);
    match g {
        Id => shift_only(n, m, id),
        R2 => Ok(half_turn(n, m, id, t.t(R2))),
        // (x, y) -> (n-1-x-a, y+b)
        F => mirror(n, m, F, t),
        // (x, y) -> (x+a, m-1-y-b)
        R2F => mirror(m, n, R2F, t),
        R | R3 | RF | R3F => unreachable!("rejected by check_element"),
    }
}

/// Shift-summed count for `g ∈ D8` on the `n x n` torus.
pub fn fxpt_square_torus(
    g: DihedralElement,
    n: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    check_element(g, &GridShape::torus(n, n)?, t)?;
    let id = t.t(Id);
    let sq = n * n;
    let v = match g {
        Id => {
            let mut sum = BigUint::from(0u32);
            for d1 in divisors(n)?.iter() {
                for d2 in divisors(n)?.iter() {
                    sum += tpow(id, sq / lcm(d1, d2)) * (euler_phi(d1)? * euler_phi(d2)?);
                }
            }
            sum
        }
        R2 if n % 2 == 1 => tpow(id, (sq - 1) / 2) * t.t(R2) * sq,
        R2 => {
            let none = tpow(id, sq / 2);
            let four = tpow(id, sq / 2 - 2) * tpow(t.t(R2), 4);
            exact_big((none * 3u32 + four) * sq, 4)
        }
        F | R2F => {
            let mut sum = BigUint::from(0u32);
            for d in divisors(n)?.iter() {
                let cycle = lcm(2, d);
                let fixed = t.t(g.pow(d));
                let term = if n.is_multiple_of(2) {
                    tpow(id, exact(sq, cycle))
                        + tpow(id, exact(sq - 2 * n, cycle)) * tpow(fixed, exact(2 * n, d))
                } else {
                    tpow(id, exact(sq - n, cycle)) * tpow(fixed, n / d)
                };
                sum += term * euler_phi(d)?;
            }
            if n.is_multiple_of(2) {
                exact_big(sum * n, 2)
            } else {
                sum * n
            }
        }
        R | R3 if n % 2 == 1 => tpow(id, exact(sq - 1, 4)) * t.t(g) * sq,
        R | R3 => {
            // odd a+b: two fixed cells (need t_g), one 2-cycle (needs t_{g^2}),
            // the rest 4-cycles; even a+b: all 4-cycles
            let none = tpow(id, exact(sq, 4));
            let some = tpow(id, exact(sq - 4, 4)) * tpow(t.t(g), 2) * t.t(R2);
            exact_big((none + some) * sq, 2)
        }
        RF | R3F => {
            let mut sum = BigUint::from(0u32);
            for d in divisors(n)?.iter() {
                let term = if d % 2 == 1 {
                    tpow(id, exact(sq - n, 2 * d)) * tpow(t.t(g), n / d)
                } else {
                    tpow(id, exact(sq, 2 * d))
                };
                sum += term * euler_phi(d)?;
            }
            sum * n
        }
    };
    Ok(v)
}

/// Dispatches to the square formulas when `n == m`.
pub fn fxpt_torus(
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    if n == m {
        fxpt_square_torus(g, n, t)
    } else {
        fxpt_rect_torus(g, n, m, t)
    }
}

/// Distinct tilings of the `n x m` torus up to shifts and `group`.
pub fn count_torus(
    n: usize,
    m: usize,
    group: SymmetryGroup,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    let shape = GridShape::torus(n, m)?;
    let sum = sum_over_group(group, &shape, t, |g| fxpt_torus(g, n, m, t))?;
    burnside_average(sum, (n * m * group.order()) as u64)
}
