use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which resource bound refused a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Guard {
    Paths,
    Facets,
    Faces,
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Guard::Paths => "max-paths",
            Guard::Facets => "max-facets",
            Guard::Faces => "max-faces",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{guard} guard refused the computation: estimated workload {requested} exceeds limit {limit}")]
    GuardExceeded {
        guard: Guard,
        requested: BigInt,
        limit: u64,
    },

    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("cannot reverse a polynomial of degree {degree} to top degree {top}")]
    ReverseDegree { degree: usize, top: usize },

    #[error("got {len} entries, expected {expected}")]
    LengthMismatch { len: usize, expected: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// Resource bounds for the enumerating code paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Lattice paths per endpoint pair (and path tuples in the brute-force oracle).
    pub max_paths: u64,
    /// Facets of the jet complex.
    pub max_facets: u64,
    /// Encoded faces inserted by the f-vector oracle.
    pub max_faces: u64,
}

impl Limits {
    pub const DEFAULT_MAX_PATHS: u64 = 1_000_000;
    pub const DEFAULT_MAX_FACETS: u64 = 10_000_000;
    pub const DEFAULT_MAX_FACES: u64 = 100_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_paths: Self::DEFAULT_MAX_PATHS,
            max_facets: Self::DEFAULT_MAX_FACETS,
            max_faces: Self::DEFAULT_MAX_FACES,
        }
    }
}

pub(crate) fn check_guard(guard: Guard, requested: &BigInt, limit: u64) -> Result<()> {
    if *requested > BigInt::from(limit) {
        Err(Error::GuardExceeded {
            guard,
            requested: requested.clone(),
            limit,
        })
    } else {
        Ok(())
    }
}
