//! Error type shared by the whole crate.

use thiserror::Error;

use crate::curve::PointLocation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Vectors of different dimension fed to a pairwise operation.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    /// A curve description that is not a simple closed curve (or is otherwise
    /// structurally broken: too few vertices, repeated vertices, bad radius,
    /// non-finite coordinates).
    #[error("invalid curve topology: {0}")]
    Topology(String),

    /// Boundary sampling asked for fewer than 3 magnets or a phase outside [0, 1).
    #[error("invalid sampling: {0}")]
    Sampling(String),

    /// A point that had to be interior was on the boundary or outside.
    #[error("point is not interior to the curve (location: {0:?})")]
    Location(PointLocation),

    /// The null point was magnetized while strict origin handling was on.
    #[error("the origin is excluded while strict origin handling is on")]
    Origin,

    /// A zero-length magnet where a direction was required.
    #[error("degenerate zero-vector magnet")]
    DegenerateMagnet,

    /// Any other violated argument contract (negative tolerance, bad resolution
    /// ladder, empty corpus, undersized bench, ...).
    #[error("invalid argument: {0}")]
    Argument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
