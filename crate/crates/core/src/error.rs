use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a lattice polytope needs at least one point")]
    EmptyPolytope,

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("matrix is not square")]
    NotSquare,

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("direction is not primitive")]
    NotPrimitive,

    #[error("polytope is not full-dimensional (affine dimension {affine_dim} in ambient dimension {dim}); reduce its dimension first")]
    Degenerate { affine_dim: usize, dim: usize },

    #[error("invalid width bounds: {0}")]
    InvalidBounds(String),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
