//! Brute-force ground truth.
//!
//! Tilings are enumerated in odometer order over row-major cells, with cell 0
//! as the most significant digit, so enumeration order is lexicographic order.
//! Two fixed-count routes are kept separate on purpose: a direct scan of every
//! tiling, and a product over the cell orbits of one symmetry element.

use crate::error::{Error, Result};
use crate::group::{cell_orbits, cell_permutation, semidirect_mul, GridShape, SymmetryElement};
use crate::par::{self, Execution};
use crate::tileset::TileDesignSet;
use num_bigint::BigUint;
use num_traits::One;
use std::collections::HashSet;
use std::fmt;

pub const DEFAULT_MAX_STATES: u64 = 10_000_000;
pub const DEFAULT_FLOOD_FILL_STATES: u64 = 1_000_000;
/// At or below this many tilings, orbit counts are also checked by flood-fill.
pub const TINY_STATES: u128 = 4096;
pub const BUDGET_ENV: &str = "TILECOUNT_ORACLE_BUDGET";

const SHARDS: u64 = 256;

/// Caps on the number of tilings the oracle will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_states: u64,
    pub flood_fill_states: u64,
    /// Ignore both caps.
    pub override_cap: bool,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_states: DEFAULT_MAX_STATES,
            flood_fill_states: DEFAULT_FLOOD_FILL_STATES,
            override_cap: false,
        }
    }
}

impl OracleBudget {
    /// Same cap for both scans.
    pub fn with_cap(cap: u64) -> Self {
        OracleBudget {
            max_states: cap,
            flood_fill_states: cap,
            override_cap: false,
        }
    }

    pub fn unlimited() -> Self {
        OracleBudget {
            override_cap: true,
            ..Default::default()
        }
    }

    /// Default budget, with both caps replaced by `$TILECOUNT_ORACLE_BUDGET`
    /// when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse::<u64>()
                .map(Self::with_cap)
                .map_err(|_| Error::Config(format!("{BUDGET_ENV}={v} is not a state count"))),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, states: u128, cap: u64) -> Result<u64> {
        if !self.override_cap && states > cap as u128 {
            return Err(Error::BudgetExceeded { states, cap });
        }
        u64::try_from(states).map_err(|_| Error::BudgetExceeded {
            states,
            cap: u64::MAX,
        })
    }

    pub fn check_direct(&self, states: u128) -> Result<u64> {
        self.check(states, self.max_states)
    }

    pub fn check_flood_fill(&self, states: u128) -> Result<u64> {
        self.check(states, self.flood_fill_states)
    }
}

/// `k^(nm)`, saturating.
pub fn state_count(shape: &GridShape, k: usize) -> u128 {
    let cells = u32::try_from(shape.num_cells()).unwrap_or(u32::MAX);
    (k as u128).checked_pow(cells).unwrap_or(u128::MAX)
}

/// One tiling: a design index per cell, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TilingAssignment {
    pub shape: GridShape,
    pub cells: Vec<usize>,
}

impl TilingAssignment {
    pub fn new(shape: GridShape, cells: Vec<usize>, ts: &TileDesignSet) -> Result<Self> {
        if cells.len() != shape.num_cells() {
            return Err(Error::Config(format!(
                "tiling has {} cells, shape {shape} needs {}",
                cells.len(),
                shape.num_cells()
            )));
        }
        if let Some(&d) = cells.iter().find(|&&d| d >= ts.len()) {
            return Err(Error::UnknownDesign(d.to_string()));
        }
        Ok(TilingAssignment { shape, cells })
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[y * self.shape.n + x]
    }

    /// The tiling moved by `s`: each tile goes to `c·s` and its design to `d·g`.
    pub fn act(&self, s: &SymmetryElement, ts: &TileDesignSet) -> Result<Self> {
        let mv = Move::new(s, &self.shape, ts)?;
        let mut out = vec![0; self.cells.len()];
        mv.apply(&self.cells, &mut out);
        Ok(TilingAssignment {
            shape: self.shape,
            cells: out,
        })
    }

    pub fn is_fixed_by(&self, s: &SymmetryElement, ts: &TileDesignSet) -> Result<bool> {
        Ok(Move::new(s, &self.shape, ts)?.fixes(&self.cells))
    }
}

impl fmt::Display for TilingAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.cells.chunks(self.shape.n).enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            let row: Vec<String> = row.iter().map(|d| d.to_string()).collect();
            f.write_str(&row.join(","))?;
        }
        Ok(())
    }
}

/// A symmetry element compiled to index maps.
struct Move {
    perm: Vec<usize>,
    dmap: Vec<usize>,
}

impl Move {
    fn new(s: &SymmetryElement, shape: &GridShape, ts: &TileDesignSet) -> Result<Self> {
        // re-validate the shifts for this shape
        SymmetryElement::new(s.shift_x, s.shift_y, s.g, shape)?;
        Ok(Move {
            perm: cell_permutation(s, shape)?,
            dmap: ts.design_permutation(s.g)?,
        })
    }

    fn apply(&self, src: &[usize], dst: &mut [usize]) {
        for (i, &d) in src.iter().enumerate() {
            dst[self.perm[i]] = self.dmap[d];
        }
    }

    fn fixes(&self, cells: &[usize]) -> bool {
        cells
            .iter()
            .enumerate()
            .all(|(i, &d)| cells[self.perm[i]] == self.dmap[d])
    }
}

fn decode(mut idx: u64, k: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = (idx % k as u64) as usize;
        idx /= k as u64;
    }
}

fn encode(digits: &[usize], k: usize) -> u64 {
    digits
        .iter()
        .fold(0u64, |acc, &d| acc * k as u64 + d as u64)
}

fn step(digits: &mut [usize], k: usize) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < k {
            return;
        }
        *d = 0;
    }
}

/// Number of tilings fixed by `s`, by scanning all of them.
pub fn fixed_count_direct(
    s: &SymmetryElement,
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
) -> Result<BigUint> {
    fixed_count_direct_with(s, shape, ts, budget, Execution::default())
}

/// [`fixed_count_direct`] with an explicit execution mode.
pub fn fixed_count_direct_with(
    s: &SymmetryElement,
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
    exec: Execution,
) -> Result<BigUint> {
    let mv = Move::new(s, shape, ts)?;
    let k = ts.len();
    let total = budget.check_direct(state_count(shape, k))?;
    let cells = shape.num_cells();
    let fixed = par::sum_ranges(total, SHARDS, exec, |lo, hi| {
        let mut digits = vec![0; cells];
        decode(lo, k, &mut digits);
        let mut count = 0;
        for _ in lo..hi {
            if mv.fixes(&digits) {
                count += 1;
            }
            step(&mut digits, k);
        }
        count
    });
    Ok(BigUint::from(fixed))
}

/// Number of tilings fixed by `s` as a product over the cell orbits of `<s>`:
/// an orbit of length `L` contributes the number of designs fixed by `g^L`.
pub fn fixed_count_orbit_formula(
    s: &SymmetryElement,
    shape: &GridShape,
    ts: &TileDesignSet,
) -> Result<BigUint> {
    SymmetryElement::new(s.shift_x, s.shift_y, s.g, shape)?;
    let mut product = BigUint::one();
    for orbit in cell_orbits(s, shape)? {
        product *= ts.fixed_design_count(s.g.pow(orbit.len()))?;
    }
    Ok(product)
}

/// How [`count_orbits_with`] obtains each fixed count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FixedCountPath {
    Direct,
    OrbitFormula,
    /// Direct scan at tiny scale, orbit formula otherwise.
    #[default]
    Auto,
}

/// Checks that `group` is a duplicate-free list closed under composition
/// and containing the identity.
pub fn check_closed(group: &[SymmetryElement], shape: &GridShape) -> Result<()> {
    let set: HashSet<_> = group.iter().copied().collect();
    if set.len() != group.len() || !set.contains(&SymmetryElement::identity()) {
        return Err(Error::NotClosed);
    }
    for a in group {
        for b in group {
            if !set.contains(&semidirect_mul(a, b, shape)?) {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(())
}

/// Number of orbits of tilings under `group`, by Burnside over its elements.
/// At tiny scale the result is also compared against a flood-fill.
pub fn count_orbits_direct(
    group: &[SymmetryElement],
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
) -> Result<BigUint> {
    count_orbits_with(group, shape, ts, budget, FixedCountPath::Auto)
}

pub fn count_orbits_with(
    group: &[SymmetryElement],
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
    path: FixedCountPath,
) -> Result<BigUint> {
    check_closed(group, shape)?;
    let states = state_count(shape, ts.len());
    let tiny = states <= TINY_STATES;
    let direct = match path {
        FixedCountPath::Direct => true,
        FixedCountPath::OrbitFormula => false,
        FixedCountPath::Auto => tiny,
    };
    let mut sum = BigUint::from(0u32);
    for s in group {
        sum += if direct {
            fixed_count_direct(s, shape, ts, budget)?
        } else {
            fixed_count_orbit_formula(s, shape, ts)?
        };
    }
    let order = group.len() as u64;
    let (q, r) = num_integer::Integer::div_rem(&sum, &BigUint::from(order));
    if r != BigUint::from(0u32) {
        return Err(Error::NonIntegral { order });
    }
    if tiny {
        let flood = count_orbits_flood_fill(group, shape, ts, budget)?;
        if BigUint::from(flood) != q {
            return Err(Error::OracleMismatch(format!(
                "{shape}: Burnside gives {q}, flood-fill gives {flood}"
            )));
        }
    }
    Ok(q)
}

/// Walks every tiling in odometer order and marks its whole orbit. The first
/// unvisited tiling of each orbit is its lexicographically least member.
fn flood_fill(
    group: &[SymmetryElement],
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
    mut on_rep: impl FnMut(&[usize]),
) -> Result<u64> {
    check_closed(group, shape)?;
    let k = ts.len();
    let total = budget.check_flood_fill(state_count(shape, k))?;
    let moves = group
        .iter()
        .map(|s| Move::new(s, shape, ts))
        .collect::<Result<Vec<_>>>()?;
    let cells = shape.num_cells();
    let mut visited = vec![false; total as usize];
    let mut digits = vec![0; cells];
    let mut image = vec![0; cells];
    let mut orbits = 0;
    for idx in 0..total {
        if !visited[idx as usize] {
            orbits += 1;
            on_rep(&digits);
            for mv in &moves {
                mv.apply(&digits, &mut image);
                visited[encode(&image, k) as usize] = true;
            }
        }
        step(&mut digits, k);
    }
    Ok(orbits)
}

/// Number of orbits, by explicit flood-fill over all tilings.
pub fn count_orbits_flood_fill(
    group: &[SymmetryElement],
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
) -> Result<u64> {
    flood_fill(group, shape, ts, budget, |_| {})
}

/// The lexicographically least tiling of each orbit, in lexicographic order.
pub fn orbit_representatives(
    group: &[SymmetryElement],
    shape: &GridShape,
    ts: &TileDesignSet,
    budget: &OracleBudget,
) -> Result<Vec<TilingAssignment>> {
    let mut reps = Vec::new();
    flood_fill(group, shape, ts, budget, |cells| {
        reps.push(TilingAssignment {
            shape: *shape,
            cells: cells.to_vec(),
        })
    })?;
    Ok(reps)
}

/// Least member of the orbit of `tiling` under `group`.
pub fn canonicalize(
    tiling: &TilingAssignment,
    group: &[SymmetryElement],
    ts: &TileDesignSet,
) -> Result<TilingAssignment> {
    let mut best = tiling.clone();
    for s in group {
        let image = tiling.act(s, ts)?;
        if image.cells < best.cells {
            best = image;
        }
    }
    Ok(best)
}
