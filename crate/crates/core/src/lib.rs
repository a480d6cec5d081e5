//! Counting tilings of grids, cylinders and tori up to symmetry.
//!
//! A tile set is a finite set of designs acted on by a subgroup `R` of the
//! dihedral group `D8`. Tilings are counted up to `R` together with the
//! cyclic shifts of the surface, using closed-form fixed-point counts that
//! depend on the tile set only through its fixed-design table `t_g`.
//! [`oracle`] enumerates tilings directly and is the independent check.

pub mod arith;
pub mod count;
pub mod error;
pub mod group;
pub mod oracle;
pub mod par;
pub mod tileset;

pub use count::{count, fxpt, CountRequest, FixedPointCount};
pub use error::{Error, Result};
pub use group::{Cell, DihedralElement, GridShape, Surface, SymmetryElement, SymmetryGroup};
pub use tileset::{FixedDesignTable, OrbitSpec, TileDesignSet, TileSetConfig, TileSource};
