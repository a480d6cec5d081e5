//! Symmetries of the square and rectangle, the shift groups of the cylinder
//! and torus, and how both act on cells.
//!
//! All actions are right actions: `g1 * g2` means "apply `g1`, then `g2`".
//! `r` is a quarter turn `(x, y) -> (n-1-y, x)` and `f` is the mirror
//! `(x, y) -> (n-1-x, y)`. Elements are stored in the normal form `r^k f^s`.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralElement {
    Id,
    R,
    R2,
    R3,
    F,
    RF,
    R2F,
    R3F,
}

use DihedralElement::*;

const ELEMENTS: [DihedralElement; 8] = [Id, R, R2, R3, F, RF, R2F, R3F];

const fn normal_form_product(a: u8, b: u8) -> u8 {
    let (ra, fa) = (a & 3, a >> 2);
    let (rb, fb) = (b & 3, b >> 2);
    // f r^b = r^{-b} f
    let rot = if fa == 0 {
        (ra + rb) & 3
    } else {
        (ra + 4 - rb) & 3
    };
    rot | ((fa ^ fb) << 2)
}

const fn build_table() -> [[u8; 8]; 8] {
    let mut table = [[0u8; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            table[a][b] = normal_form_product(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    table
}

static MUL_TABLE: [[u8; 8]; 8] = build_table();

impl DihedralElement {
    pub const ALL: [DihedralElement; 8] = ELEMENTS;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> DihedralElement {
        ELEMENTS[i]
    }

    pub fn rotation(self) -> usize {
        self.index() & 3
    }

    pub fn is_reflection(self) -> bool {
        self.index() >= 4
    }

    /// True for `r`, `r3`, `rf`, `r3f`: elements that swap the axes.
    pub fn is_square_only(self) -> bool {
        self.rotation() % 2 == 1
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: DihedralElement) -> DihedralElement {
        Self::from_index(MUL_TABLE[self.index()][rhs.index()] as usize)
    }

    pub fn inverse(self) -> DihedralElement {
        if self.is_reflection() {
            self
        } else {
            Self::from_index((4 - self.rotation()) & 3)
        }
    }

    pub fn pow(self, k: usize) -> DihedralElement {
        match k % self.order() {
            0 => Id,
            e => (1..e).fold(self, |acc, _| acc.mul(self)),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Id => 1,
            R | R3 => 4,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Id => "id",
            R => "r",
            R2 => "r2",
            R3 => "r3",
            F => "f",
            RF => "rf",
            R2F => "r2f",
            R3F => "r3f",
        }
    }

    /// Image of the cell `(x, y)` on an `n x m` board. Square-only elements
    /// assume `n == m`.
    pub(crate) fn apply(self, x: usize, y: usize, n: usize, m: usize) -> (usize, usize) {
        match self {
            Id => (x, y),
            R => (n - 1 - y, x),
            R2 => (n - 1 - x, m - 1 - y),
            R3 => (y, n - 1 - x),
            F => (n - 1 - x, y),
            RF => (y, x),
            R2F => (x, m - 1 - y),
            R3F => (n - 1 - y, n - 1 - x),
        }
    }

    /// The automorphism of the shift group paired with this element in the
    /// semidirect product.
    pub fn phi(self, shift: (usize, usize), n: usize, m: usize) -> (usize, usize) {
        let (a, b) = (shift.0 % n, shift.1 % m);
        let neg_a = (n - a) % n;
        let neg_b = (m - b) % m;
        match self {
            Id => (a, b),
            R => (b, neg_a),
            R2 => (neg_a, neg_b),
            R3 => (neg_b % n, a % m),
            F => (neg_a, b),
            RF => (b, a),
            R2F => (a, neg_b),
            R3F => (neg_b % n, neg_a % m),
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DihedralElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .chars()
            .filter(|c| *c != '^' && !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        let g = match key.as_str() {
            "id" | "e" | "1" => Id,
            "r" | "r1" => R,
            "r2" => R2,
            "r3" => R3,
            "f" => F,
            "rf" | "r1f" => RF,
            "r2f" => R2F,
            "r3f" => R3F,
            _ => return Err(Error::UnknownElementName(s.to_string())),
        };
        Ok(g)
    }
}

/// A subgroup of D8, stored as the set of its elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryGroup {
    mask: u8,
}

#[allow(clippy::needless_range_loop)]
fn closure_mask(seed: u8) -> u8 {
    let mut mask = seed | 1;
    loop {
        let mut next = mask;
        for a in 0..8 {
            if mask & (1 << a) == 0 {
                continue;
            }
            for b in 0..8 {
                if mask & (1 << b) != 0 {
                    next |= 1 << MUL_TABLE[a][b];
                }
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

impl SymmetryGroup {
    pub fn generated_by(generators: &[DihedralElement]) -> Self {
        let seed = generators.iter().fold(0u8, |acc, g| acc | (1 << g.index()));
        SymmetryGroup {
            mask: closure_mask(seed),
        }
    }

    pub fn trivial() -> Self {
        Self::generated_by(&[])
    }

    /// Symmetries of the rectangle, `<r2, f>`.
    pub fn d4() -> Self {
        Self::generated_by(&[R2, F])
    }

    pub fn d8() -> Self {
        Self::generated_by(&[R, F])
    }

    pub fn c4() -> Self {
        Self::generated_by(&[R])
    }

    pub fn mask(self) -> u8 {
        self.mask
    }

    pub fn contains(self, g: DihedralElement) -> bool {
        self.mask & (1 << g.index()) != 0
    }

    pub fn order(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn elements(self) -> impl Iterator<Item = DihedralElement> {
        ELEMENTS.into_iter().filter(move |g| self.contains(*g))
    }

    /// True iff the group fits inside `<r2, f>` and so acts on non-square boards.
    pub fn rectangular_ok(self) -> bool {
        self.elements().all(|g| !g.is_square_only())
    }

    pub fn is_subgroup_of(self, other: SymmetryGroup) -> bool {
        self.mask & !other.mask == 0
    }

    /// `x^-1 H x`.
    pub fn conjugate_by(self, x: DihedralElement) -> SymmetryGroup {
        let xi = x.inverse();
        let mask = self
            .elements()
            .fold(0u8, |acc, h| acc | (1 << xi.mul(h).mul(x).index()));
        SymmetryGroup { mask }
    }

    /// Fewest generators, ties broken by element order.
    pub fn generators(self) -> Vec<DihedralElement> {
        let elems: Vec<_> = self.elements().filter(|g| *g != Id).collect();
        if elems.is_empty() {
            return Vec::new();
        }
        for g in &elems {
            if Self::generated_by(&[*g]) == self {
                return vec![*g];
            }
        }
        for (i, g) in elems.iter().enumerate() {
            for h in &elems[i + 1..] {
                if Self::generated_by(&[*g, *h]) == self {
                    return vec![*g, *h];
                }
            }
        }
        unreachable!("every subgroup of D8 has at most two generators")
    }

    /// Canonical generator-list name, `id` for the trivial group.
    pub fn name(self) -> String {
        let gens = self.generators();
        if gens.is_empty() {
            "id".to_string()
        } else {
            gens.iter().map(|g| g.name()).collect::<Vec<_>>().join(",")
        }
    }

    /// Sorted element names; the canonical ordering of subgroups.
    pub fn sort_key(self) -> Vec<&'static str> {
        let mut names: Vec<_> = self.elements().map(|g| g.name()).collect();
        names.sort_unstable();
        names
    }

    pub fn subgroups(self) -> Vec<SymmetryGroup> {
        let elems: Vec<_> = self.elements().collect();
        let mut found: Vec<SymmetryGroup> = Vec::new();
        for (i, g) in elems.iter().enumerate() {
            for h in &elems[i..] {
                let s = Self::generated_by(&[*g, *h]);
                if !found.contains(&s) {
                    found.push(s);
                }
            }
        }
        found.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then(a.sort_key().cmp(&b.sort_key()))
        });
        found
    }
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SymmetryGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('<').trim_end_matches('>');
        match trimmed.to_ascii_lowercase().as_str() {
            "d8" => return Ok(Self::d8()),
            "d4" => return Ok(Self::d4()),
            "c4" => return Ok(Self::c4()),
            "trivial" | "" => return Ok(Self::trivial()),
            _ => {}
        }
        let gens = trimmed
            .split(',')
            .map(|part| {
                part.parse::<DihedralElement>()
                    .map_err(|_| Error::UnknownGroupName(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated_by(&gens))
    }
}

/// A conjugacy class of subgroups inside an ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: SymmetryGroup,
    pub conjugates: Vec<SymmetryGroup>,
}

impl SubgroupClass {
    pub fn contains(&self, s: SymmetryGroup) -> bool {
        self.conjugates.contains(&s)
    }

    pub fn name(&self) -> String {
        self.representative.name()
    }
}

/// All subgroups of `ambient`, grouped by conjugacy within `ambient`. The
/// representative of each class is the least subgroup by [`SymmetryGroup::sort_key`];
/// classes come largest first.
pub fn subgroup_classes(ambient: SymmetryGroup) -> Vec<SubgroupClass> {
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for s in ambient.subgroups() {
        if classes.iter().any(|c| c.contains(s)) {
            continue;
        }
        let mut conjugates: Vec<SymmetryGroup> = Vec::new();
        for x in ambient.elements() {
            let c = s.conjugate_by(x);
            if !conjugates.contains(&c) {
                conjugates.push(c);
            }
        }
        conjugates.sort_by_key(|c| c.sort_key());
        classes.push(SubgroupClass {
            representative: conjugates[0],
            conjugates,
        });
    }
    classes.sort_by(|a, b| {
        b.representative
            .order()
            .cmp(&a.representative.order())
            .then(
                a.representative
                    .sort_key()
                    .cmp(&b.representative.sort_key()),
            )
    });
    classes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    Grid,
    Cylinder,
    Torus,
}

impl Surface {
    pub const ALL: [Surface; 3] = [Surface::Grid, Surface::Cylinder, Surface::Torus];

    pub fn name(self) -> &'static str {
        match self {
            Surface::Grid => "grid",
            Surface::Cylinder => "cylinder",
            Surface::Torus => "torus",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grid" => Ok(Surface::Grid),
            "cylinder" | "cyl" => Ok(Surface::Cylinder),
            "torus" => Ok(Surface::Torus),
            _ => Err(Error::Config(format!("unknown surface `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }
}

/// `n` columns by `m` rows of some surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub n: usize,
    pub m: usize,
    pub surface: Surface,
}

impl GridShape {
    pub fn new(n: usize, m: usize, surface: Surface) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::EmptyShape { n, m });
        }
        Ok(GridShape { n, m, surface })
    }

    pub fn grid(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, Surface::Grid)
    }

    pub fn cylinder(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, Surface::Cylinder)
    }

    pub fn torus(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, Surface::Torus)
    }

    pub fn num_cells(&self) -> usize {
        self.n * self.m
    }

    /// Row-major position of a cell.
    pub fn index(&self, c: Cell) -> usize {
        c.y * self.n + c.x
    }

    pub fn cell_at(&self, i: usize) -> Cell {
        Cell::new(i % self.n, i / self.n)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.num_cells()).map(|i| self.cell_at(i))
    }

    /// Square-only elements need a square board that is not a cylinder.
    pub fn allows(&self, g: DihedralElement) -> bool {
        !g.is_square_only() || (self.n == self.m && self.surface != Surface::Cylinder)
    }

    pub fn check_element(&self, g: DihedralElement) -> Result<()> {
        if self.allows(g) {
            Ok(())
        } else {
            Err(Error::SquareOnlyElement {
                g,
                n: self.n,
                m: self.m,
                surface: self.surface,
            })
        }
    }

    pub fn check_group(&self, group: SymmetryGroup) -> Result<()> {
        group.elements().try_for_each(|g| self.check_element(g))
    }

    /// Number of shift elements: 1, `n` or `nm`.
    pub fn shift_count(&self) -> usize {
        match self.surface {
            Surface::Grid => 1,
            Surface::Cylinder => self.n,
            Surface::Torus => self.n * self.m,
        }
    }

    pub fn shifts(&self) -> Vec<(usize, usize)> {
        match self.surface {
            Surface::Grid => vec![(0, 0)],
            Surface::Cylinder => (0..self.n).map(|a| (a, 0)).collect(),
            Surface::Torus => (0..self.m)
                .flat_map(|b| (0..self.n).map(move |a| (a, b)))
                .collect(),
        }
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.n, self.m, self.surface)
    }
}

/// `((shift_x, shift_y), g)`: shift first, then apply `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    pub shift_x: usize,
    pub shift_y: usize,
    pub g: DihedralElement,
}

impl SymmetryElement {
    pub fn new(
        shift_x: usize,
        shift_y: usize,
        g: DihedralElement,
        shape: &GridShape,
    ) -> Result<Self> {
        shape.check_element(g)?;
        let ok = match shape.surface {
            Surface::Grid => shift_x == 0 && shift_y == 0,
            Surface::Cylinder => shift_x < shape.n && shift_y == 0,
            Surface::Torus => shift_x < shape.n && shift_y < shape.m,
        };
        if !ok {
            return Err(Error::InvalidShift {
                shift_x,
                shift_y,
                n: shape.n,
                m: shape.m,
                surface: shape.surface,
            });
        }
        Ok(SymmetryElement {
            shift_x,
            shift_y,
            g,
        })
    }

    pub fn pure(g: DihedralElement) -> Self {
        SymmetryElement {
            shift_x: 0,
            shift_y: 0,
            g,
        }
    }

    pub fn identity() -> Self {
        Self::pure(Id)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.shift_x, self.shift_y, self.g)
    }
}

pub fn dihedral_mul(g1: DihedralElement, g2: DihedralElement) -> DihedralElement {
    g1.mul(g2)
}

pub fn act_cell(c: Cell, g: DihedralElement, shape: &GridShape) -> Result<Cell> {
    shape.check_element(g)?;
    debug_assert!(c.x < shape.n && c.y < shape.m);
    let (x, y) = g.apply(c.x, c.y, shape.n, shape.m);
    Ok(Cell::new(x, y))
}

fn act_cell_sym_unchecked(c: Cell, s: &SymmetryElement, shape: &GridShape) -> Cell {
    let x = (c.x + s.shift_x) % shape.n;
    let y = (c.y + s.shift_y) % shape.m;
    let (x, y) = s.g.apply(x, y, shape.n, shape.m);
    Cell::new(x, y)
}

pub fn act_cell_sym(c: Cell, s: &SymmetryElement, shape: &GridShape) -> Result<Cell> {
    shape.check_element(s.g)?;
    Ok(act_cell_sym_unchecked(c, s, shape))
}

/// `(shift1, g1)(shift2, g2) = (shift1 + phi_{g1}(shift2), g1 g2)`.
pub fn semidirect_mul(
    s1: &SymmetryElement,
    s2: &SymmetryElement,
    shape: &GridShape,
) -> Result<SymmetryElement> {
    shape.check_element(s1.g)?;
    shape.check_element(s2.g)?;
    let (n, m) = (shape.n, shape.m);
    let (px, py) = s1.g.phi((s2.shift_x, s2.shift_y), n, m);
    Ok(SymmetryElement {
        shift_x: (s1.shift_x + px) % n,
        shift_y: (s1.shift_y + py) % m,
        g: s1.g.mul(s2.g),
    })
}

pub fn semidirect_pow(s: &SymmetryElement, k: usize, shape: &GridShape) -> Result<SymmetryElement> {
    let mut acc = SymmetryElement::identity();
    for _ in 0..k {
        acc = semidirect_mul(&acc, s, shape)?;
    }
    Ok(acc)
}

/// Order of `s` in the semidirect product.
pub fn element_order(s: &SymmetryElement, shape: &GridShape) -> Result<usize> {
    let mut acc = *s;
    let mut k = 1;
    while !acc.is_identity() {
        acc = semidirect_mul(&acc, s, shape)?;
        k += 1;
    }
    Ok(k)
}

/// Where each row-major cell index goes under `s`.
pub fn cell_permutation(s: &SymmetryElement, shape: &GridShape) -> Result<Vec<usize>> {
    shape.check_element(s.g)?;
    Ok(shape
        .cells()
        .map(|c| shape.index(act_cell_sym_unchecked(c, s, shape)))
        .collect())
}

/// Orbits of `<s>` on the cells. Each orbit starts at its least (row-major)
/// cell and follows `c, c·s, c·s², …`; orbits are listed by first cell.
pub fn cell_orbits(s: &SymmetryElement, shape: &GridShape) -> Result<Vec<Vec<Cell>>> {
    let perm = cell_permutation(s, shape)?;
    let mut seen = vec![false; perm.len()];
    let mut orbits = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(shape.cell_at(i));
            i = perm[i];
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Every element of `shifts ⋊ group` for the shape's surface, dihedral part
/// outermost.
pub fn group_elements(shape: &GridShape, group: SymmetryGroup) -> Result<Vec<SymmetryElement>> {
    shape.check_group(group)?;
    let shifts = shape.shifts();
    Ok(group
        .elements()
        .flat_map(|g| {
            shifts.iter().map(move |&(a, b)| SymmetryElement {
                shift_x: a,
                shift_y: b,
                g,
            })
        })
        .collect())
}
