use crate::group::{DihedralElement, Surface};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("grid dimensions must be positive (got {n}x{m})")]
    EmptyShape { n: usize, m: usize },

    #[error("element {g} is a symmetry of the square only; not valid on a {n}x{m} {surface}")]
    SquareOnlyElement {
        g: DihedralElement,
        n: usize,
        m: usize,
        surface: Surface,
    },

    #[error("shift ({shift_x}, {shift_y}) is not valid on a {n}x{m} {surface}")]
    InvalidShift {
        shift_x: usize,
        shift_y: usize,
        n: usize,
        m: usize,
        surface: Surface,
    },

    #[error("element {g} is not in the symmetry group {group}")]
    ElementNotInGroup { g: DihedralElement, group: String },

    #[error("group {sub} is not a subgroup of {ambient}")]
    NotASubgroup { sub: String, ambient: String },

    #[error("unknown dihedral element name `{0}`")]
    UnknownElementName(String),

    #[error("unknown symmetry group `{0}`")]
    UnknownGroupName(String),

    #[error("unknown tile design `{0}`")]
    UnknownDesign(String),

    #[error("duplicate tile design `{0}`")]
    DuplicateDesign(String),

    #[error("tile action table: {0}")]
    InvalidAction(String),

    #[error("tile-set config: {0}")]
    Config(String),

    #[error("element list is not closed under composition")]
    NotClosed,

    #[error("enumeration of {states} states exceeds the budget of {cap}")]
    BudgetExceeded { states: u128, cap: u64 },

    #[error("Burnside sum is not divisible by the group order {order}; this is a formula bug")]
    NonIntegral { order: u64 },

    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
}
