//! Exact enumeration of lozenge tilings of hexagons with holes along a
//! symmetry axis, their symmetry classes, and the lattice-path Pfaffian and
//! determinant formulas that count them.

pub mod caps;
pub mod closed_forms;
pub mod error;
pub mod linalg;
pub mod paths;
pub mod reduction;
pub mod region;
pub mod tiler;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use linalg::{ExactInt, ExactMatrix, Label};
pub use region::{Region, RegionSpec};
