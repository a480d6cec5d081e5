//! `sequence`: b-file output for a family of shapes.
//!
//! Lines are `index value`. Square families vary `n = m`; otherwise either
//! `m` is fixed, or a table over an `m` range is flattened row-major.

use crate::{CliError, CliResult, Problem};
use std::fmt::Write as _;
use tilecount_core::{Surface, SymmetryGroup};

#[derive(Debug, Clone)]
pub struct SequenceRequest {
    pub surface: Surface,
    pub square: bool,
    pub group: SymmetryGroup,
    pub tiles: String,
    pub n_min: usize,
    pub n_max: usize,
    /// Fixed `m` for a non-square sequence.
    pub m: Option<usize>,
    /// Column range for table mode.
    pub m_range: Option<(usize, usize)>,
    /// Index of the first line; defaults to `n_min`, or 1 in table mode.
    pub offset: Option<i64>,
    pub transpose: bool,
}

impl SequenceRequest {
    /// The `(n, m)` shapes in output order.
    pub fn shapes(&self) -> CliResult<Vec<(usize, usize)>> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(CliError::Usage(format!(
                "need 1 <= n-min <= n-max (got {}..{})",
                self.n_min, self.n_max
            )));
        }
        let ns = self.n_min..=self.n_max;
        match (self.square, self.m, self.m_range) {
            (true, None, None) => Ok(ns.map(|n| (n, n)).collect()),
            (false, Some(m), None) => Ok(ns.map(|n| (n, m)).collect()),
            (false, None, Some((lo, hi))) if 1 <= lo && lo <= hi => {
                Ok(ns.flat_map(|n| (lo..=hi).map(move |m| (n, m))).collect())
            }
            _ => Err(CliError::Usage(
                "choose exactly one of --square, --m, or --m-min/--m-max".into(),
            )),
        }
    }

    fn first_index(&self) -> i64 {
        self.offset.unwrap_or(if self.m_range.is_some() {
            1
        } else {
            self.n_min as i64
        })
    }
}

pub fn cmd_sequence(req: &SequenceRequest) -> CliResult<String> {
    let shapes = req.shapes()?;
    let mut out = String::new();
    if let Some((lo, hi)) = req.m_range {
        let _ = writeln!(
            out,
            "# rows n={}..{}, columns m={lo}..{hi}, row-major",
            req.n_min, req.n_max
        );
    }
    let first = req.first_index();
    for (i, (n, m)) in shapes.into_iter().enumerate() {
        let problem = Problem {
            surface: req.surface,
            n,
            m,
            group: req.group,
            tiles: req.tiles.clone(),
            transpose: req.transpose,
        };
        let _ = writeln!(out, "{} {}", first + i as i64, problem.count()?);
    }
    Ok(out)
}
