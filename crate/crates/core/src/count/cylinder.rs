//! The `n x m` cylinder: columns shift cyclically, `R ≤ D4` always.

use super::{
    burnside_average, check_element, exact, exact_big, sum_over_group, tpow, FixedPointCount,
};
use crate::arith::{divisors, euler_phi, lcm};
use crate::error::Result;
use crate::group::{DihedralElement, GridShape, SymmetryGroup};
use crate::tileset::FixedDesignTable;
use num_bigint::BigUint;
use DihedralElement::*;

/// Sum over the `n` column shifts `a` of the tilings fixed by `(a, g)`.
pub fn fxpt_cylinder(
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    check_element(g, &GridShape::cylinder(n, m)?, t)?;
    let id = t.t(Id);
    let nm = n * m;
    let v = match g {
        Id => {
            let mut sum = BigUint::from(0u32);
            for d in divisors(n)?.iter() {
                sum += tpow(id, nm / d) * euler_phi(d)?;
            }
            sum
        }
        R2 if m.is_multiple_of(2) => tpow(id, nm / 2) * n,
        // middle row: odd shifts give two fixed cells, even shifts none
        R2 if n.is_multiple_of(2) => {
            let none = tpow(id, nm / 2);
            let two = tpow(id, (nm - 2) / 2) * tpow(t.t(R2), 2);
            exact_big((none + two) * n, 2)
        }
        R2 => tpow(id, (nm - 1) / 2) * t.t(R2) * n,
        // odd shifts fix two columns, even shifts none
        F if n.is_multiple_of(2) => {
            let none = tpow(id, nm / 2);
            let two = tpow(id, exact(nm - 2 * m, 2)) * tpow(t.t(F), 2 * m);
            exact_big((none + two) * n, 2)
        }
        F => tpow(id, exact(nm - m, 2)) * tpow(t.t(F), m) * n,
        R2F => {
            let mut sum = BigUint::from(0u32);
            for d in divisors(n)?.iter() {
                let cycle = lcm(d, 2);
                let term = if m.is_multiple_of(2) {
                    tpow(id, exact(nm, cycle))
                } else {
                    // middle row cells sit in orbits of size d
                    tpow(id, exact(nm - n, cycle)) * tpow(t.t(R2F.pow(d)), n / d)
                };
                sum += term * euler_phi(d)?;
            }
            sum
        }
        R | R3 | RF | R3F => unreachable!("rejected by check_element"),
    };
    Ok(v)
}

/// Distinct tilings of the `n x m` cylinder up to shifts and `group`.
pub fn count_cylinder(
    n: usize,
    m: usize,
    group: SymmetryGroup,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    let shape = GridShape::cylinder(n, m)?;
    let sum = sum_over_group(group, &shape, t, |g| fxpt_cylinder(g, n, m, t))?;
    burnside_average(sum, (n * group.order()) as u64)
}
