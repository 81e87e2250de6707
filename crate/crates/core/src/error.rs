use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the polyhedron is empty")]
    EmptyPolyhedron,

    #[error("the polyhedron is degenerate (it has no vertices)")]
    Degenerate,

    #[error("the polyhedron is bounded")]
    Bounded,

    #[error("the polyhedron is not full-dimensional")]
    NotFullDimensional,

    #[error("singular linear map")]
    Singular,

    #[error("point maps to infinity")]
    PointAtInfinity,

    #[error("all homogeneous coordinates are zero")]
    ZeroHomogeneous,

    #[error("index {index} out of range (size {len})")]
    OutOfRange { index: usize, len: usize },

    /// A documented precondition does not hold; the message names the clause.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The request is outside what the implemented constructions cover.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("iteration cap of {0} attempts exceeded")]
    IterationCap(usize),

    #[error("parse error: {0}")]
    Parse(String),

    /// A constructed object failed its own re-verification.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
