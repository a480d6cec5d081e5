//! Closed-form fixed-point counts and Burnside totals for each surface.
//!
//! Every `fxpt_*` function returns, for one dihedral element `g`, the number
//! of tilings fixed by `g` summed over all shifts the surface allows. The
//! count of distinct tilings is the sum over `g ∈ R` divided by the order of
//! the full symmetry group.

pub mod cylinder;
pub mod grid;
pub mod torus;

use crate::error::{Error, Result};
use crate::group::{DihedralElement, GridShape, Surface, SymmetryGroup};
use crate::par;
use crate::tileset::FixedDesignTable;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

pub use cylinder::{count_cylinder, fxpt_cylinder};
pub use grid::{count_grid, fxpt_grid, fxpt_rect_grid, fxpt_square_grid};
pub use torus::{count_torus, fxpt_rect_torus, fxpt_square_torus, fxpt_torus};

/// Exact count of tilings; these overflow machine words almost immediately.
pub type FixedPointCount = BigUint;

/// Everything a closed-form count needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountRequest {
    pub surface: Surface,
    pub n: usize,
    pub m: usize,
    pub group: SymmetryGroup,
    pub table: FixedDesignTable,
}

impl CountRequest {
    /// Validates the shape/group combination and restricts `table` to `group`.
    pub fn new(
        surface: Surface,
        n: usize,
        m: usize,
        group: SymmetryGroup,
        table: &FixedDesignTable,
    ) -> Result<Self> {
        let shape = GridShape::new(n, m, surface)?;
        shape.check_group(group)?;
        let table = table.restrict(group)?;
        Ok(CountRequest {
            surface,
            n,
            m,
            group,
            table,
        })
    }

    pub fn shape(&self) -> GridShape {
        GridShape {
            n: self.n,
            m: self.m,
            surface: self.surface,
        }
    }

    /// Order of the full symmetry group: shifts times `|R|`.
    pub fn group_order(&self) -> u64 {
        (self.shape().shift_count() * self.group.order()) as u64
    }
}

/// Shift-summed fixed-point count of `g` on any surface.
pub fn fxpt(
    surface: Surface,
    g: DihedralElement,
    n: usize,
    m: usize,
    t: &FixedDesignTable,
) -> Result<FixedPointCount> {
    match surface {
        Surface::Grid => fxpt_grid(g, n, m, t),
        Surface::Cylinder => fxpt_cylinder(g, n, m, t),
        Surface::Torus => fxpt_torus(g, n, m, t),
    }
}

/// Per-element terms of the Burnside sum, in element order.
pub fn breakdown(req: &CountRequest) -> Result<Vec<(DihedralElement, FixedPointCount)>> {
    let elements: Vec<_> = req.group.elements().collect();
    par::map_ordered(&elements, |&g| {
        fxpt(req.surface, g, req.n, req.m, &req.table).map(|v| (g, v))
    })
    .into_iter()
    .collect()
}

pub fn burnside_sum(req: &CountRequest) -> Result<FixedPointCount> {
    Ok(breakdown(req)?.into_iter().map(|(_, v)| v).sum())
}

/// Number of distinct tilings.
pub fn count(req: &CountRequest) -> Result<FixedPointCount> {
    match req.surface {
        Surface::Grid => count_grid(req.n, req.m, req.group, &req.table),
        Surface::Cylinder => count_cylinder(req.n, req.m, req.group, &req.table),
        Surface::Torus => count_torus(req.n, req.m, req.group, &req.table),
    }
}

pub(crate) fn burnside_average(sum: FixedPointCount, order: u64) -> Result<FixedPointCount> {
    let (q, r) = sum.div_rem(&BigUint::from(order));
    if !r.is_zero() {
        return Err(Error::NonIntegral { order });
    }
    Ok(q)
}

pub(crate) fn check_element(
    g: DihedralElement,
    shape: &GridShape,
    t: &FixedDesignTable,
) -> Result<()> {
    shape.check_element(g)?;
    t.get(g)?;
    Ok(())
}

/// Sum of per-element terms for every `g` in `group`, checked against the table.
pub(crate) fn sum_over_group(
    group: SymmetryGroup,
    shape: &GridShape,
    t: &FixedDesignTable,
    term: impl Fn(DihedralElement) -> Result<FixedPointCount> + Sync,
) -> Result<FixedPointCount> {
    shape.check_group(group)?;
    if !group.is_subgroup_of(t.group()) {
        return Err(Error::NotASubgroup {
            sub: group.name(),
            ambient: t.group().name(),
        });
    }
    let elements: Vec<_> = group.elements().collect();
    let terms = par::map_ordered(&elements, |&g| term(g));
    let mut sum = BigUint::zero();
    for v in terms {
        sum += v?;
    }
    Ok(sum)
}

/// `t^e` for a design count and an orbit count.
pub(crate) fn tpow(t: u64, e: usize) -> BigUint {
    let e = u32::try_from(e).expect("exponent fits in u32");
    BigUint::from(t).pow(e)
}

/// `num / den`, which the surrounding parity case guarantees is exact.
pub(crate) fn exact(num: usize, den: usize) -> usize {
    assert!(
        den != 0 && num.is_multiple_of(den),
        "{num} is not divisible by {den}"
    );
    num / den
}

/// `x / den` for a big sum that must be divisible.
pub(crate) fn exact_big(x: BigUint, den: usize) -> BigUint {
    let (q, r) = x.div_rem(&BigUint::from(den));
    assert!(r.is_zero(), "term is not divisible by {den}");
    q
}
