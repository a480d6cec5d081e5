//! Command implementations for the `tilecount` binary. Each command returns
//! its full output as a string so tests can drive it without a process.

pub mod crosscheck;
pub mod oeis;
pub mod render;
pub mod sequence;
pub mod tiles;

use num_bigint::BigUint;
use std::fmt::Write as _;
use thiserror::Error;
use tilecount_core::count::{breakdown, count, CountRequest};
use tilecount_core::{DihedralElement, Error, FixedDesignTable, Surface, SymmetryGroup};

pub use tiles::resolve_tiles;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_CROSSCHECK: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Failed(_) => EXIT_CROSSCHECK,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Config(_)
            | Error::UnknownDesign(_)
            | Error::DuplicateDesign(_)
            | Error::InvalidAction(_) => CliError::Config(msg),
            Error::BudgetExceeded { .. } => CliError::Budget(msg),
            Error::NonIntegral { .. } | Error::OracleMismatch(_) => CliError::Failed(msg),
            _ => CliError::Usage(msg),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A counting problem as given on the command line.
#[derive(Debug, Clone)]
pub struct Problem {
    pub surface: Surface,
    pub n: usize,
    pub m: usize,
    pub group: SymmetryGroup,
    pub tiles: String,
    /// Shift rows instead of columns (swaps the axes before counting).
    pub transpose: bool,
}

impl Problem {
    pub fn request(&self) -> CliResult<CountRequest> {
        let source = resolve_tiles(&self.tiles, self.group)?;
        let table = source.fixed_design_table().restrict(self.group)?;
        let (n, m, group, table) = if self.transpose {
            transpose(self.n, self.m, self.group, &table)
        } else {
            (self.n, self.m, self.group, table)
        };
        Ok(CountRequest::new(self.surface, n, m, group, &table)?)
    }

    pub fn count(&self) -> CliResult<BigUint> {
        Ok(count(&self.request()?)?)
    }
}

/// Reflecting in the main diagonal swaps the axes and conjugates by `rf`,
/// which exchanges `f` and `r2f`.
pub fn transpose(
    n: usize,
    m: usize,
    group: SymmetryGroup,
    table: &FixedDesignTable,
) -> (usize, usize, SymmetryGroup, FixedDesignTable) {
    let rf = DihedralElement::RF;
    let conj = group.conjugate_by(rf);
    let values: Vec<_> = conj
        .elements()
        .map(|g| (g, table.t(rf.mul(g).mul(rf))))
        .collect();
    (m, n, conj, FixedDesignTable::from_values(conj, &values))
}

/// `count`: the number of distinct tilings, optionally with the Burnside terms.
pub fn cmd_count(problem: &Problem, show_breakdown: bool) -> CliResult<String> {
    let req = problem.request()?;
    let total = count(&req)?;
    let mut out = format!("{total}\n");
    if show_breakdown {
        let terms = breakdown(&req)?;
        let sum: BigUint = terms.iter().map(|(_, v)| v).sum();
        let _ = writeln!(out, "{:<8} fxpt", "element");
        for (g, v) in terms {
            let _ = writeln!(out, "{:<8} {v}", g.name());
        }
        let _ = writeln!(out, "{:<8} {sum}", "sum");
        let _ = writeln!(out, "{:<8} {}", "order", req.group_order());
    }
    Ok(out)
}

/// `tileset-info`: designs, orbits, stabilizer census and the t-table.
pub fn cmd_tileset_info(tiles: &str, group: Option<SymmetryGroup>) -> CliResult<String> {
    let probe = group.unwrap_or_else(SymmetryGroup::d8);
    let source = resolve_tiles(tiles, probe)?;
    let group = group.unwrap_or_else(|| source.group());
    let ts = source.to_design_set().restrict(group)?;
    let mut out = String::new();
    let _ = writeln!(out, "group <{}> order {}", group, group.order());
    let _ = writeln!(out, "designs {}", ts.len());
    for orbit in ts.orbits() {
        let names: Vec<_> = orbit.iter().map(|&d| ts.design_name(d)).collect();
        let stab = ts.stabilizer(orbit[0])?;
        let _ = writeln!(out, "orbit [{}] stabilizer <{}>", names.join(" "), stab);
    }
    let _ = writeln!(out, "spec {}", ts.classify_orbits());
    for (g, v) in ts.fixed_design_table().entries() {
        let _ = writeln!(out, "t_{:<4} {v}", g.name());
    }
    Ok(out)
}
