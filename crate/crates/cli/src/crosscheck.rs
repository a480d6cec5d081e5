//! `crosscheck`: closed forms against the oracle over a sweep of shapes,
//! groups and tile sets. Rows come out in sweep order whatever the
//! execution order.

use crate::{resolve_tiles, CliResult};
use num_bigint::BigUint;
use std::fmt;
use tilecount_core::count::{count, CountRequest};
use tilecount_core::group::group_elements;
use tilecount_core::oracle::{count_orbits_with, FixedCountPath, OracleBudget};
use tilecount_core::par::map_ordered;
use tilecount_core::{
    DihedralElement, Error, FixedDesignTable, GridShape, OrbitSpec, Surface, SymmetryGroup,
    TileDesignSet,
};

#[derive(Debug, Clone)]
pub struct CrosscheckConfig {
    pub surfaces: Vec<Surface>,
    pub max_dim: usize,
    pub max_cells: usize,
    /// `None` sweeps every group valid for each shape.
    pub groups: Option<Vec<SymmetryGroup>>,
    /// Empty sweeps every single-orbit tile set over each group.
    pub tiles: Vec<String>,
    /// Adds one to `t_id` on the closed-form side; a negative control.
    pub corrupt: bool,
    pub budget: OracleBudget,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            surfaces: Surface::ALL.to_vec(),
            max_dim: 3,
            max_cells: 9,
            groups: None,
            tiles: Vec::new(),
            corrupt: false,
            budget: OracleBudget::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub shape: GridShape,
    pub group: SymmetryGroup,
    pub tiles: String,
    pub closed: Option<BigUint>,
    pub oracle: Option<BigUint>,
    pub status: Status,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn tally(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.tally(Status::Fail) == 0
    }
}

fn show(v: &Option<BigUint>) -> String {
    v.as_ref().map_or_else(|| "-".into(), |v| v.to_string())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "surface  n m group    tiles            closed oracle status"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<8} {} {} {:<8} {:<16} {} {} {}",
                r.shape.surface.name(),
                r.shape.n,
                r.shape.m,
                format!("<{}>", r.group),
                r.tiles,
                show(&r.closed),
                show(&r.oracle),
                r.status
            )?;
        }
        writeln!(
            f,
            "pass {} fail {} skipped {}",
            self.tally(Status::Pass),
            self.tally(Status::Fail),
            self.tally(Status::Skipped)
        )
    }
}

struct Case {
    shape: GridShape,
    group: SymmetryGroup,
    label: String,
    ts: TileDesignSet,
}

fn ambient(shape: &GridShape) -> SymmetryGroup {
    if shape.n == shape.m && shape.surface != Surface::Cylinder {
        SymmetryGroup::d8()
    } else {
        SymmetryGroup::d4()
    }
}

fn cases(cfg: &CrosscheckConfig) -> CliResult<Vec<Case>> {
    let mut named = Vec::new();
    for name in &cfg.tiles {
        let ts = resolve_tiles(name, SymmetryGroup::d8())?.to_design_set();
        named.push((name.clone(), ts));
    }
    let mut out = Vec::new();
    for &surface in &cfg.surfaces {
        for n in 1..=cfg.max_dim {
            for m in 1..=cfg.max_dim {
                if n * m > cfg.max_cells {
                    continue;
                }
                let shape = GridShape::new(n, m, surface)?;
                let groups = match &cfg.groups {
                    Some(gs) => gs.clone(),
                    None => ambient(&shape).subgroups(),
                };
                for group in groups {
                    if shape.check_group(group).is_err() {
                        continue;
                    }
                    if named.is_empty() {
                        for spec in OrbitSpec::single_orbit_catalog(group) {
                            let stab = spec
                                .classes()
                                .iter()
                                .zip(spec.counts())
                                .find(|(_, &k)| k > 0)
                                .map(|(c, _)| c.name())
                                .unwrap_or_default();
                            out.push(Case {
                                shape,
                                group,
                                label: format!("orbit:{stab}"),
                                ts: spec.realize(),
                            });
                        }
                    }
                    for (name, ts) in &named {
                        if let Ok(ts) = ts.restrict(group) {
                            out.push(Case {
                                shape,
                                group,
                                label: name.clone(),
                                ts,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn corrupted(t: &FixedDesignTable) -> FixedDesignTable {
    let values: Vec<_> = t
        .entries()
        .map(|(g, v)| (g, if g == DihedralElement::Id { v + 1 } else { v }))
        .collect();
    FixedDesignTable::from_values(t.group(), &values)
}

fn run_case(case: &Case, cfg: &CrosscheckConfig) -> Row {
    let mut table = case.ts.fixed_design_table();
    if cfg.corrupt {
        table = corrupted(&table);
    }
    let closed = CountRequest::new(
        case.shape.surface,
        case.shape.n,
        case.shape.m,
        case.group,
        &table,
    )
    .and_then(|req| count(&req))
    .ok();
    let oracle = group_elements(&case.shape, case.group).and_then(|elems| {
        count_orbits_with(
            &elems,
            &case.shape,
            &case.ts,
            &cfg.budget,
            FixedCountPath::Direct,
        )
    });
    let (oracle, status) = match oracle {
        Err(Error::BudgetExceeded { .. }) => (None, Status::Skipped),
        Err(_) => (None, Status::Fail),
        Ok(v) => {
            let status = if closed.as_ref() == Some(&v) {
                Status::Pass
            } else {
                Status::Fail
            };
            (Some(v), status)
        }
    };
    Row {
        shape: case.shape,
        group: case.group,
        tiles: case.label.clone(),
        closed,
        oracle,
        status,
    }
}

pub fn cmd_crosscheck(cfg: &CrosscheckConfig) -> CliResult<Report> {
    let cases = cases(cfg)?;
    let rows = map_ordered(&cases, |c| run_case(c, cfg));
    Ok(Report { rows })
}
