use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input vectors are linearly dependent")]
    DependentInput,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron is empty")]
    Empty,

    #[error("vertex {vertex} lies on {facets} facets (not simple)")]
    NotSimple { vertex: String, facets: usize },

    #[error("vertex {vertex} is not smooth: active normal determinant is {det}")]
    NotSmoothDelzant { vertex: String, det: String },

    #[error("half-space {0} does not touch any vertex")]
    RedundantHalfSpace(usize),

    #[error("unknown builtin polytope `{0}`")]
    UnknownName(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),

    #[error("image polytope is lower-dimensional (affine dimension {found} < {expected})")]
    DegenerateImage { expected: usize, found: usize },

    #[error("equivalence violated: {0}")]
    EquivalenceViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
