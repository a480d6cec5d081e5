//! Tile-design sets as finite R-sets.
//!
//! A set of tile designs is either given explicitly (design names plus a
//! right-action table) or abstractly as an [`OrbitSpec`]: how many orbits
//! there are for each conjugacy class of stabilizer. Counting only ever needs
//! the [`FixedDesignTable`] `t_g = |{d : d·g = d}|`, which both forms produce.

use crate::error::{Error, Result};
use crate::group::{
    act_cell_sym, subgroup_classes, Cell, DihedralElement, GridShape, SubgroupClass,
    SymmetryElement, SymmetryGroup,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// An explicit R-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileDesignSet {
    group: SymmetryGroup,
    designs: Vec<String>,
    // action[d][g] for g in group; other columns hold d itself
    action: Vec<[usize; 8]>,
}

impl TileDesignSet {
    /// Builds a set from an action table indexed by design position. Every
    /// element of `group` other than the identity must appear in every row;
    /// the identity may be omitted.
    pub fn new(
        group: SymmetryGroup,
        designs: Vec<String>,
        action: &BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Self> {
        let lookup = |name: &str| -> Result<usize> {
            designs
                .iter()
                .position(|d| d == name)
                .ok_or_else(|| Error::UnknownDesign(name.to_string()))
        };
        for (i, d) in designs.iter().enumerate() {
            if designs[..i].contains(d) {
                return Err(Error::DuplicateDesign(d.clone()));
            }
        }
        for name in action.keys() {
            lookup(name)?;
        }
        let mut table = Vec::with_capacity(designs.len());
        for (i, d) in designs.iter().enumerate() {
            let mut row = [i; 8];
            let empty = BTreeMap::new();
            let entries = action.get(d).unwrap_or(&empty);
            let mut given = [false; 8];
            for (gname, target) in entries {
                let g: DihedralElement = gname.parse()?;
                if !group.contains(g) {
                    return Err(Error::InvalidAction(format!(
                        "design `{d}` lists {g}, which is not in {group}"
                    )));
                }
                if given[g.index()] {
                    return Err(Error::InvalidAction(format!(
                        "design `{d}` lists {g} twice"
                    )));
                }
                given[g.index()] = true;
                row[g.index()] = lookup(target)?;
            }
            for g in group.elements() {
                if g != DihedralElement::Id && !given[g.index()] {
                    return Err(Error::InvalidAction(format!(
                        "design `{d}` is missing an entry for {g}"
                    )));
                }
            }
            table.push(row);
        }
        Self::from_table(group, designs, table)
    }

    /// Builds a set from a positional table, checking the right-action law.
    pub fn from_table(
        group: SymmetryGroup,
        designs: Vec<String>,
        action: Vec<[usize; 8]>,
    ) -> Result<Self> {
        if designs.len() != action.len() {
            return Err(Error::InvalidAction(
                "table has the wrong number of rows".into(),
            ));
        }
        let k = designs.len();
        for (d, row) in action.iter().enumerate() {
            for g in group.elements() {
                if row[g.index()] >= k {
                    return Err(Error::InvalidAction(format!(
                        "design `{}` maps outside the set under {g}",
                        designs[d]
                    )));
                }
            }
            if row[DihedralElement::Id.index()] != d {
                return Err(Error::InvalidAction(format!(
                    "identity moves design `{}`",
                    designs[d]
                )));
            }
        }
        for d in 0..k {
            for g1 in group.elements() {
                for g2 in group.elements() {
                    let lhs = action[action[d][g1.index()]][g2.index()];
                    let rhs = action[d][g1.mul(g2).index()];
                    if lhs != rhs {
                        return Err(Error::InvalidAction(format!(
                            "right-action law fails for design `{}` with {g1} then {g2}",
                            designs[d]
                        )));
                    }
                }
            }
        }
        Ok(TileDesignSet {
            group,
            designs,
            action,
        })
    }

    pub fn group(&self) -> SymmetryGroup {
        self.group
    }

    pub fn len(&self) -> usize {
        self.designs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.designs.is_empty()
    }

    pub fn designs(&self) -> &[String] {
        &self.designs
    }

    pub fn design_name(&self, d: usize) -> &str {
        &self.designs[d]
    }

    pub fn design_index(&self, name: &str) -> Result<usize> {
        self.designs
            .iter()
            .position(|d| d == name)
            .ok_or_else(|| Error::UnknownDesign(name.to_string()))
    }

    fn check_design(&self, d: usize) -> Result<()> {
        if d < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownDesign(format!("#{d}")))
        }
    }

    fn check_element(&self, g: DihedralElement) -> Result<()> {
        if self.group.contains(g) {
            Ok(())
        } else {
            Err(Error::ElementNotInGroup {
                g,
                group: self.group.name(),
            })
        }
    }

    /// `d · g`.
    pub fn act(&self, d: usize, g: DihedralElement) -> Result<usize> {
        self.check_design(d)?;
        self.check_element(g)?;
        Ok(self.action[d][g.index()])
    }

    /// The permutation of design indices induced by `g`.
    pub fn design_permutation(&self, g: DihedralElement) -> Result<Vec<usize>> {
        self.check_element(g)?;
        Ok(self.action.iter().map(|row| row[g.index()]).collect())
    }

    pub fn stabilizer(&self, d: usize) -> Result<SymmetryGroup> {
        self.check_design(d)?;
        let gens: Vec<_> = self
            .group
            .elements()
            .filter(|g| self.action[d][g.index()] == d)
            .collect();
        Ok(SymmetryGroup::generated_by(&gens))
    }

    /// Orbits of the designs, each listed in index order, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for d in 0..self.len() {
            if seen[d] {
                continue;
            }
            let mut orbit: Vec<usize> = self
                .group
                .elements()
                .map(|g| self.action[d][g.index()])
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &e in &orbit {
                seen[e] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn classify_orbits(&self) -> OrbitSpec {
        let classes = subgroup_classes(self.group);
        let mut counts = vec![0u64; classes.len()];
        for orbit in self.orbits() {
            let stab = self.stabilizer(orbit[0]).expect("orbit member is a design");
            let k = classes
                .iter()
                .position(|c| c.contains(stab))
                .expect("stabilizer is a subgroup of the ambient group");
            counts[k] += 1;
        }
        OrbitSpec {
            group: self.group,
            classes,
            counts,
        }
    }

    pub fn fixed_design_count(&self, g: DihedralElement) -> Result<u64> {
        self.check_element(g)?;
        Ok((0..self.len())
            .filter(|&d| self.action[d][g.index()] == d)
            .count() as u64)
    }

    pub fn fixed_design_table(&self) -> FixedDesignTable {
        let mut values = [0u64; 8];
        for g in self.group.elements() {
            values[g.index()] = self.fixed_design_count(g).expect("g is in the group");
        }
        FixedDesignTable {
            group: self.group,
            values,
        }
    }

    /// The same designs viewed as an R-set for a subgroup.
    pub fn restrict(&self, sub: SymmetryGroup) -> Result<TileDesignSet> {
        if !sub.is_subgroup_of(self.group) {
            return Err(Error::NotASubgroup {
                sub: sub.name(),
                ambient: self.group.name(),
            });
        }
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(d, row)| {
                let mut r = [d; 8];
                for g in sub.elements() {
                    r[g.index()] = row[g.index()];
                }
                r
            })
            .collect();
        Ok(TileDesignSet {
            group: sub,
            designs: self.designs.clone(),
            action,
        })
    }

    /// Renames and reorders designs: design `d` of `self` becomes position
    /// `perm[d]` of the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<TileDesignSet> {
        let k = self.len();
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..k).collect::<Vec<_>>() {
            return Err(Error::InvalidAction(
                "relabelling is not a permutation".into(),
            ));
        }
        let mut designs = vec![String::new(); k];
        let mut action = vec![[0usize; 8]; k];
        for d in 0..k {
            designs[perm[d]] = self.designs[d].clone();
            for (gi, &target) in self.action[d].iter().enumerate() {
                action[perm[d]][gi] = perm[target];
            }
        }
        Self::from_table(self.group, designs, action)
    }

    /// The action table keyed by design name, without identity entries.
    pub fn action_map(&self) -> BTreeMap<String, BTreeMap<String, String>> {
        self.action
            .iter()
            .enumerate()
            .map(|(d, row)| {
                let entries = self
                    .group
                    .elements()
                    .filter(|g| *g != DihedralElement::Id)
                    .map(|g| (g.name().to_string(), self.designs[row[g.index()]].clone()))
                    .collect();
                (self.designs[d].clone(), entries)
            })
            .collect()
    }
}

/// Moves a tile: the cell by the full symmetry, the design by its dihedral part.
pub fn act_tile(
    tile: (Cell, usize),
    s: &SymmetryElement,
    ts: &TileDesignSet,
    shape: &GridShape,
) -> Result<(Cell, usize)> {
    let d = ts.act(tile.1, s.g)?;
    Ok((act_cell_sym(tile.0, s, shape)?, d))
}

/// Number of orbits per conjugacy class of stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpec {
    group: SymmetryGroup,
    classes: Vec<SubgroupClass>,
    counts: Vec<u64>,
}

impl OrbitSpec {
    /// `counts` may name any member of a class; repeated classes add up.
    pub fn new(group: SymmetryGroup, counts: &[(SymmetryGroup, u64)]) -> Result<Self> {
        let classes = subgroup_classes(group);
        let mut tally = vec![0u64; classes.len()];
        for &(s, c) in counts {
            let k = classes
                .iter()
                .position(|cl| cl.contains(s))
                .ok_or_else(|| Error::NotASubgroup {
                    sub: s.name(),
                    ambient: group.name(),
                })?;
            tally[k] += c;
        }
        Ok(OrbitSpec {
            group,
            classes,
            counts: tally,
        })
    }

    /// A single orbit with stabilizer `stabilizer`.
    pub fn single_orbit(group: SymmetryGroup, stabilizer: SymmetryGroup) -> Result<Self> {
        Self::new(group, &[(stabilizer, 1)])
    }

    /// One spec per conjugacy class: every transitive R-set up to isomorphism.
    pub fn single_orbit_catalog(group: SymmetryGroup) -> Vec<OrbitSpec> {
        subgroup_classes(group)
            .into_iter()
            .map(|c| Self::single_orbit(group, c.representative).expect("class of the group"))
            .collect()
    }

    pub fn group(&self) -> SymmetryGroup {
        self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    /// Counts aligned with [`OrbitSpec::classes`].
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count_for(&self, s: SymmetryGroup) -> Option<u64> {
        self.classes
            .iter()
            .position(|c| c.contains(s))
            .map(|k| self.counts[k])
    }

    pub fn num_orbits(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total_designs(&self) -> u64 {
        let order = self.group.order() as u64;
        self.classes
            .iter()
            .zip(&self.counts)
            .map(|(c, &k)| k * (order / c.representative.order() as u64))
            .sum()
    }

    /// `t_g` by counting cosets `Sx` with `x g x⁻¹ ∈ S`.
    pub fn fixed_design_count(&self, g: DihedralElement) -> Result<u64> {
        if !self.group.contains(g) {
            return Err(Error::ElementNotInGroup {
                g,
                group: self.group.name(),
            });
        }
        let mut total = 0;
        for (class, &k) in self.classes.iter().zip(&self.counts) {
            if k == 0 {
                continue;
            }
            let s = class.representative;
            let hits = self
                .group
                .elements()
                .filter(|x| s.contains(x.mul(g).mul(x.inverse())))
                .count() as u64;
            total += k * (hits / s.order() as u64);
        }
        Ok(total)
    }

    pub fn fixed_design_table(&self) -> FixedDesignTable {
        let mut values = [0u64; 8];
        for g in self.group.elements() {
            values[g.index()] = self.fixed_design_count(g).expect("g is in the group");
        }
        FixedDesignTable {
            group: self.group,
            values,
        }
    }

    /// A concrete R-set with this orbit structure: each orbit is the set of
    /// right cosets `S\R` of its class representative.
    pub fn realize(&self) -> TileDesignSet {
        let mut designs = Vec::new();
        let mut action: Vec<[usize; 8]> = Vec::new();
        let mut orbit_no = 0;
        for (class, &k) in self.classes.iter().zip(&self.counts) {
            let s = class.representative;
            let cosets = right_cosets(s, self.group);
            for _ in 0..k {
                let base = designs.len();
                for (ci, coset) in cosets.iter().enumerate() {
                    designs.push(format!("o{orbit_no}c{ci}"));
                    let mut row = [base + ci; 8];
                    for g in self.group.elements() {
                        let image = coset_times(*coset, g);
                        let target = cosets
                            .iter()
                            .position(|c| *c == image)
                            .expect("cosets are permuted");
                        row[g.index()] = base + target;
                    }
                    action.push(row);
                }
                orbit_no += 1;
            }
        }
        TileDesignSet::from_table(self.group, designs, action)
            .expect("coset action satisfies the action law")
    }
}

impl fmt::Display for OrbitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self
            .classes
            .iter()
            .zip(&self.counts)
            .map(|(c, k)| format!("<{}>:{}", c.name(), k))
            .collect();
        write!(f, "R=<{}> {}", self.group, parts.join(" "))
    }
}

// cosets as element masks
fn right_cosets(s: SymmetryGroup, ambient: SymmetryGroup) -> Vec<u8> {
    let mut cosets = Vec::new();
    for x in ambient.elements() {
        let mask = s
            .elements()
            .fold(0u8, |acc, h| acc | (1 << h.mul(x).index()));
        if !cosets.contains(&mask) {
            cosets.push(mask);
        }
    }
    cosets
}

fn coset_times(coset: u8, g: DihedralElement) -> u8 {
    DihedralElement::ALL
        .iter()
        .filter(|h| coset & (1 << h.index()) != 0)
        .fold(0u8, |acc, h| acc | (1 << h.mul(g).index()))
}

/// `t_g` for every `g` in the ambient group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FixedDesignTable {
    group: SymmetryGroup,
    values: [u64; 8],
}

impl FixedDesignTable {
    /// A table from raw numbers; entries for elements outside `group` are
    /// ignored and missing entries are zero.
    pub fn from_values(group: SymmetryGroup, values: &[(DihedralElement, u64)]) -> Self {
        let mut v = [0u64; 8];
        for &(g, t) in values {
            if group.contains(g) {
                v[g.index()] = t;
            }
        }
        FixedDesignTable { group, values: v }
    }

    pub fn group(&self) -> SymmetryGroup {
        self.group
    }

    pub fn get(&self, g: DihedralElement) -> Result<u64> {
        if self.group.contains(g) {
            Ok(self.values[g.index()])
        } else {
            Err(Error::ElementNotInGroup {
                g,
                group: self.group.name(),
            })
        }
    }

    /// `t_g`. Panics if `g` is outside the table's group.
    pub fn t(&self, g: DihedralElement) -> u64 {
        self.get(g)
            .expect("t_g requested outside the ambient group")
    }

    pub fn total(&self) -> u64 {
        self.values[DihedralElement::Id.index()]
    }

    pub fn restrict(&self, sub: SymmetryGroup) -> Result<FixedDesignTable> {
        if !sub.is_subgroup_of(self.group) {
            return Err(Error::NotASubgroup {
                sub: sub.name(),
                ambient: self.group.name(),
            });
        }
        let mut values = [0u64; 8];
        for g in sub.elements() {
            values[g.index()] = self.values[g.index()];
        }
        Ok(FixedDesignTable { group: sub, values })
    }

    pub fn entries(&self) -> impl Iterator<Item = (DihedralElement, u64)> + '_ {
        self.group.elements().map(|g| (g, self.values[g.index()]))
    }
}

/// Where `t_g` values come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TileSource {
    Explicit(TileDesignSet),
    Spec(OrbitSpec),
}

impl TileSource {
    pub fn group(&self) -> SymmetryGroup {
        match self {
            TileSource::Explicit(ts) => ts.group(),
            TileSource::Spec(spec) => spec.group(),
        }
    }

    pub fn fixed_design_count(&self, g: DihedralElement) -> Result<u64> {
        match self {
            TileSource::Explicit(ts) => ts.fixed_design_count(g),
            TileSource::Spec(spec) => spec.fixed_design_count(g),
        }
    }

    pub fn fixed_design_table(&self) -> FixedDesignTable {
        match self {
            TileSource::Explicit(ts) => ts.fixed_design_table(),
            TileSource::Spec(spec) => spec.fixed_design_table(),
        }
    }

    pub fn orbit_spec(&self) -> OrbitSpec {
        match self {
            TileSource::Explicit(ts) => ts.classify_orbits(),
            TileSource::Spec(spec) => spec.clone(),
        }
    }

    /// An explicit set, realizing a spec if needed.
    pub fn to_design_set(&self) -> TileDesignSet {
        match self {
            TileSource::Explicit(ts) => ts.clone(),
            TileSource::Spec(spec) => spec.realize(),
        }
    }
}

/// Free function form of [`TileSource::fixed_design_table`] restricted to `group`.
pub fn fixed_design_table(source: &TileSource, group: SymmetryGroup) -> Result<FixedDesignTable> {
    source.fixed_design_table().restrict(group)
}

/// On-disk tile-set description (JSON).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TileSetConfig {
    Explicit {
        #[serde(rename = "R")]
        group: String,
        designs: Vec<String>,
        #[serde(default)]
        action: BTreeMap<String, BTreeMap<String, String>>,
    },
    OrbitSpec {
        #[serde(rename = "R")]
        group: String,
        counts: BTreeMap<String, u64>,
    },
}

impl TileSetConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn build(&self) -> Result<TileSource> {
        let parse_group = |s: &str| {
            s.parse::<SymmetryGroup>()
                .map_err(|e| Error::Config(e.to_string()))
        };
        match self {
            TileSetConfig::Explicit {
                group,
                designs,
                action,
            } => {
                let group = parse_group(group)?;
                TileDesignSet::new(group, designs.clone(), action).map(TileSource::Explicit)
            }
            TileSetConfig::OrbitSpec { group, counts } => {
                let group = parse_group(group)?;
                let pairs = counts
                    .iter()
                    .map(|(name, &k)| Ok((parse_group(name)?, k)))
                    .collect::<Result<Vec<_>>>()?;
                OrbitSpec::new(group, &pairs).map(TileSource::Spec)
            }
        }
    }

    pub fn from_design_set(ts: &TileDesignSet) -> Self {
        TileSetConfig::Explicit {
            group: ts.group().name(),
            designs: ts.designs().to_vec(),
            action: ts.action_map(),
        }
    }
}

/// Parses and validates a JSON tile-set config.
pub fn parse_config(text: &str) -> Result<TileSource> {
    TileSetConfig::from_json(text)?.build()
}

pub mod builtin {
    //! Tile libraries shipped with the crate.

    use super::*;

    pub const NAMES: [&str; 3] = ["two-color", "truchet-diagonal", "d4-example"];

    /// Two fully symmetric designs.
    pub const TWO_COLOR: &str = r#"{
  "kind": "explicit",
  "R": "D8",
  "designs": ["black", "white"],
  "action": {
    "black": {"r": "black", "r2": "black", "r3": "black", "f": "black", "rf": "black", "r2f": "black", "r3f": "black"},
    "white": {"r": "white", "r2": "white", "r3": "white", "f": "white", "rf": "white", "r2f": "white", "r3f": "white"}
  }
}"#;

    /// Square split along a diagonal with one half filled, named by the
    /// corner of the filled right angle.
    pub const TRUCHET_DIAGONAL: &str = r#"{
  "kind": "explicit",
  "R": "D8",
  "designs": ["nw", "ne", "se", "sw"],
  "action": {
    "nw": {"r": "sw", "r2": "se", "r3": "ne", "f": "ne", "rf": "se", "r2f": "sw", "r3f": "nw"},
    "ne": {"r": "nw", "r2": "sw", "r3": "se", "f": "nw", "rf": "ne", "r2f": "se", "r3f": "sw"},
    "se": {"r": "ne", "r2": "nw", "r3": "sw", "f": "sw", "rf": "nw", "r2f": "ne", "r3f": "se"},
    "sw": {"r": "se", "r2": "ne", "r3": "nw", "f": "se", "rf": "sw", "r2f": "nw", "r3f": "ne"}
  }
}"#;

    /// Twelve designs under the symmetries of the rectangle: two fully
    /// symmetric, one `<f>` pair, two `<r2>` pairs and one free orbit.
    pub const D4_EXAMPLE: &str = r#"{
  "kind": "explicit",
  "R": "r2,f",
  "designs": ["black", "vert", "rr3", "rr0", "nw", "ne", "sw", "se", "rr1", "rr2", "u", "d"],
  "action": {
    "black": {"r2": "black", "f": "black", "r2f": "black"},
    "vert":  {"r2": "vert",  "f": "vert",  "r2f": "vert"},
    "rr3":   {"r2": "rr3",   "f": "rr0",   "r2f": "rr0"},
    "rr0":   {"r2": "rr0",   "f": "rr3",   "r2f": "rr3"},
    "nw":    {"r2": "se",    "f": "ne",    "r2f": "sw"},
    "ne":    {"r2": "sw",    "f": "nw",    "r2f": "se"},
    "sw":    {"r2": "ne",    "f": "se",    "r2f": "nw"},
    "se":    {"r2": "nw",    "f": "sw",    "r2f": "ne"},
    "rr1":   {"r2": "rr1",   "f": "rr2",   "r2f": "rr2"},
    "rr2":   {"r2": "rr2",   "f": "rr1",   "r2f": "rr1"},
    "u":     {"r2": "d",     "f": "u",     "r2f": "d"},
    "d":     {"r2": "u",     "f": "d",     "r2f": "u"}
  }
}"#;

    pub fn config(name: &str) -> Option<&'static str> {
        match name {
            "two-color" => Some(TWO_COLOR),
            "truchet-diagonal" => Some(TRUCHET_DIAGONAL),
            "d4-example" => Some(D4_EXAMPLE),
            _ => None,
        }
    }

    pub fn load(name: &str) -> Option<TileDesignSet> {
        let text = config(name)?;
        match parse_config(text).expect("built-in tile sets are valid") {
            TileSource::Explicit(ts) => Some(ts),
            TileSource::Spec(spec) => Some(spec.realize()),
        }
    }

    pub fn two_color() -> TileDesignSet {
        load("two-color").unwrap()
    }

    pub fn truchet_diagonal() -> TileDesignSet {
        load("truchet-diagonal").unwrap()
    }

    pub fn d4_example() -> TileDesignSet {
        load("d4-example").unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;
    use crate::group::DihedralElement::*;
    use proptest::prelude::*;

    fn g(s: &str) -> SymmetryGroup {
        s.parse().unwrap()
    }

    #[test]
    fn builtins_parse() {
        assert_eq!(two_color().len(), 2);
        assert_eq!(truchet_diagonal().len(), 4);
        assert_eq!(d4_example().len(), 12);
    }

    #[test]
    fn stabilizer_examples() {
        let ts = d4_example();
        let black = ts.design_index("black").unwrap();
        assert_eq!(ts.stabilizer(black).unwrap(), SymmetryGroup::d4());
        let u = ts.design_index("u").unwrap();
        assert_eq!(ts.stabilizer(u).unwrap(), g("f"));
        let nw = ts.design_index("nw").unwrap();
        assert_eq!(ts.stabilizer(nw).unwrap(), SymmetryGroup::trivial());
        assert!(ts.stabilizer(99).is_err());
    }

    #[test]
    fn classify_d4_example() {
        let spec = d4_example().classify_orbits();
        assert_eq!(spec.count_for(SymmetryGroup::d4()), Some(2));
        assert_eq!(spec.count_for(g("f")), Some(1));
        assert_eq!(spec.count_for(g("r2")), Some(2));
        assert_eq!(spec.count_for(g("r2f")), Some(0));
        assert_eq!(spec.count_for(SymmetryGroup::trivial()), Some(1));
        assert_eq!(spec.total_designs(), 12);
    }

    #[test]
    fn classify_two_color_and_truchet() {
        for r in SymmetryGroup::d8().subgroups() {
            let spec = two_color().restrict(r).unwrap().classify_orbits();
            assert_eq!(spec.count_for(r), Some(2));
            assert_eq!(spec.num_orbits(), 2);
        }
        let ts = truchet_diagonal();
        let spec = ts.classify_orbits();
        assert_eq!(spec.num_orbits(), 1);
        let stab = ts.stabilizer(0).unwrap();
        assert_eq!(stab.order(), 2);
        assert_eq!(ts.orbits()[0].len() * stab.order(), 8);
        assert_eq!(spec.count_for(stab), Some(1));
    }

    #[test]
    fn fixed_counts_d4_example() {
        let ts = d4_example();
        let spec = ts.classify_orbits();
        assert_eq!(ts.fixed_design_count(Id).unwrap(), 12);
        assert_eq!(ts.fixed_design_count(F).unwrap(), 4);
        assert_eq!(ts.fixed_design_count(R2).unwrap(), 6);
        assert_eq!(ts.fixed_design_count(R2F).unwrap(), 2);
        for el in SymmetryGroup::d4().elements() {
            assert_eq!(
                spec.fixed_design_count(el).unwrap(),
                ts.fixed_design_count(el).unwrap()
            );
        }
        assert!(ts.fixed_design_count(R).is_err());
        assert_eq!(two_color().fixed_design_count(R2).unwrap(), 2);
        let table = two_color().fixed_design_table();
        assert!(table.entries().all(|(_, t)| t == 2));
    }

    #[test]
    fn realize_examples() {
        let free = OrbitSpec::single_orbit(SymmetryGroup::d8(), SymmetryGroup::trivial()).unwrap();
        let ts = free.realize();
        assert_eq!(ts.len(), 8);
        assert_eq!(ts.orbits().len(), 1);
        for r in SymmetryGroup::d8().subgroups() {
            let one = OrbitSpec::single_orbit(r, r).unwrap().realize();
            assert_eq!(one.len(), 1);
            assert_eq!(one.stabilizer(0).unwrap(), r);
        }
        let spec = d4_example().classify_orbits();
        let re = spec.realize();
        assert_eq!(re.len(), 12);
        assert_eq!(re.classify_orbits(), spec);
    }

    #[test]
    fn rejects_bad_tables() {
        let bad_extra =
            r#"{"kind":"explicit","R":"f","designs":["a"],"action":{"a":{"f":"a","r2":"a"}}}"#;
        assert!(matches!(
            parse_config(bad_extra),
            Err(Error::InvalidAction(_))
        ));
        let missing = r#"{"kind":"explicit","R":"r2,f","designs":["a"],"action":{"a":{"f":"a"}}}"#;
        assert!(matches!(
            parse_config(missing),
            Err(Error::InvalidAction(_))
        ));
        // f swaps a,b but r2 fixes a and moves b: violates the law for r2f
        let law = r#"{"kind":"explicit","R":"r2,f","designs":["a","b"],
            "action":{"a":{"f":"b","r2":"a","r2f":"a"},"b":{"f":"a","r2":"b","r2f":"b"}}}"#;
        assert!(matches!(parse_config(law), Err(Error::InvalidAction(_))));
        let unknown = r#"{"kind":"explicit","R":"f","designs":["a"],"action":{"a":{"f":"zz"}}}"#;
        assert!(matches!(
            parse_config(unknown),
            Err(Error::UnknownDesign(_))
        ));
        assert!(matches!(parse_config("{"), Err(Error::Config(_))));
        let bad_sub = r#"{"kind":"orbit-spec","R":"r2,f","counts":{"r":1}}"#;
        assert!(parse_config(bad_sub).is_err());
    }

    #[test]
    fn orbit_spec_config() {
        let text = r#"{"counts":{"id":1,"r3f":2},"R":"D8","kind":"orbit-spec"}"#;
        let src = parse_config(text).unwrap();
        let spec = src.orbit_spec();
        assert_eq!(spec.count_for(g("rf")), Some(2));
        assert_eq!(spec.total_designs(), 8 + 2 * 4);
        let round = TileSetConfig::from_design_set(&d4_example());
        assert_eq!(TileSetConfig::from_json(&round.to_json()).unwrap(), round);
    }

    #[test]
    fn orbit_stabilizer_and_conjugation() {
        for name in NAMES {
            let ts = load(name).unwrap();
            let r = ts.group();
            for orbit in ts.orbits() {
                for &d in &orbit {
                    assert_eq!(orbit.len() * ts.stabilizer(d).unwrap().order(), r.order());
                }
            }
            let t = ts.fixed_design_table();
            for a in r.elements() {
                for h in r.elements() {
                    assert_eq!(t.t(a), t.t(h.mul(a).mul(h.inverse())));
                }
            }
        }
    }

    fn all_specs_up_to(r: SymmetryGroup, max_orbits: usize) -> Vec<OrbitSpec> {
        let classes = subgroup_classes(r);
        let mut out = Vec::new();
        fn rec(
            r: SymmetryGroup,
            classes: &[SubgroupClass],
            start: usize,
            left: usize,
            acc: &mut Vec<(SymmetryGroup, u64)>,
            out: &mut Vec<OrbitSpec>,
        ) {
            out.push(OrbitSpec::new(r, acc).unwrap());
            if left == 0 {
                return;
            }
            for k in start..classes.len() {
                acc.push((classes[k].representative, 1));
                rec(r, classes, k, left - 1, acc, out);
                acc.pop();
            }
        }
        rec(r, &classes, 0, max_orbits, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn spec_path_matches_explicit_path_for_small_specs() {
        for r in SymmetryGroup::d8().subgroups() {
            for spec in all_specs_up_to(r, 3) {
                let ts = spec.realize();
                assert_eq!(ts.classify_orbits(), spec);
                assert_eq!(ts.len() as u64, spec.total_designs());
                for el in r.elements() {
                    assert_eq!(
                        spec.fixed_design_count(el).unwrap(),
                        ts.fixed_design_count(el).unwrap(),
                        "{spec} at {el}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn relabelled_sets_share_tables(seed in any::<u64>(), which in 0usize..3) {
            use rand::{seq::SliceRandom, SeedableRng};
            let ts = load(NAMES[which]).unwrap();
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..ts.len()).collect();
            perm.shuffle(&mut rng);
            let other = ts.relabel(&perm).unwrap();
            prop_assert_eq!(other.classify_orbits(), ts.classify_orbits());
            prop_assert_eq!(other.fixed_design_table(), ts.fixed_design_table());
        }

        #[test]
        fn random_spec_tables_round_trip(counts in proptest::collection::vec(0u64..3, 8), ri in 0usize..10) {
            let r = SymmetryGroup::d8().subgroups()[ri];
            let classes = subgroup_classes(r);
            let pairs: Vec<_> = classes.iter().zip(&counts).map(|(c, &k)| (c.representative, k)).collect();
            let spec = OrbitSpec::new(r, &pairs).unwrap();
            prop_assert_eq!(spec.realize().fixed_design_table(), spec.fixed_design_table());
        }
    }
}
