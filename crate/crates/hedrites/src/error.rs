//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by map construction, parsing and the generators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge pairing is not a fixed-point-free involution (dart {0})")]
    NotInvolution(u32),
    #[error("vertex rotation is not a permutation of the darts (dart {0})")]
    NotPermutation(u32),
    #[error("map is disconnected")]
    Disconnected,
    #[error("map has genus {0}, expected a sphere embedding")]
    NonzeroGenus(i64),
    #[error("dart count must be even, got {0}")]
    OddDartCount(usize),
    #[error("map has a face of size 1, forbidden for class {0}")]
    OneGon(String),
    #[error("map is not 4-regular (vertex {0} has degree {1})")]
    NotFourRegular(u32, usize),
    #[error("operation needs at least {need} central circuits, map has {got}")]
    TooFewCircuits { need: usize, got: usize },
    #[error("face {0} is not a 2-gon")]
    NotATwoGon(u32),
    #[error("reduction is not applicable here: {0}")]
    Unreducible(String),
    #[error("expansion would grow face {face} past size 4")]
    FaceTooBig { face: u32 },
    #[error("n_max {got} below the minimum {min} for this class")]
    NMaxTooSmall { min: usize, got: usize },
    #[error("oracle generation is capped at {max} substrate vertices, requested {got}")]
    OracleTooLarge { max: usize, got: usize },
    #[error("invalid class parameter: {0}")]
    BadClass(String),
    #[error("invalid Goldberg-Coxeter parameters (k={k}, l={l})")]
    BadGcParams { k: u32, l: u32 },
    #[error("dart permutation is not an automorphism of the map")]
    NotAnAutomorphism,
    #[error("automorphism group does not match any spherical point group: {0}")]
    Unclassifiable(String),
    #[error("planar_code cannot encode this map: {0}")]
    PlanarCodeUnsupported(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
