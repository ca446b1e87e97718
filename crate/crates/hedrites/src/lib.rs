//! Generation and analysis of octahedrites, i-hedrites and i-self-hedrites.

pub mod canon;
pub mod circuits;
pub mod selfdual;
pub mod symmetry;
pub mod error;
pub mod gen;
pub mod io;
pub mod pmap;

pub use canon::{is_isomorphic, AutomorphismGroup, CanonicalCode};
pub use error::{Error, Result};
pub use pmap::{FaceStats, PlanarMap};
pub use symmetry::PointGroup;
