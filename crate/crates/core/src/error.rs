use num_bigint::BigInt;
use thiserror::Error;

/// Shape and dimension failures of the matrix layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("element belongs to a different presentation")]
    ForeignElement,
    #[error("homomorphisms are not composable")]
    NotComposable,
    #[error("homomorphism does not respect the source relations")]
    IllDefined,
    #[error("not a canonical group: {0}")]
    NotCanonical(String),
}

/// Reasons a raw matrix is not an admissible Cuntz-Krieger matrix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("empty matrix")]
    Empty,
    #[error("not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row},{col}) = {value} is not 0 or 1")]
    EntryOutOfRange { row: usize, col: usize, value: BigInt },
    #[error("permutation matrix")]
    Permutation,
    #[error("reducible matrix (digraph not strongly connected)")]
    Reducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CkError {
    #[error("invalid matrix: {0}")]
    Invalid(#[from] ValidationError),
    #[error("homotopy degree must be 1 or 2, got {0}")]
    BadDegree(u32),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("torsion factor {0} must be at least 2")]
    BadFactor(BigInt),
    #[error("realized matrix failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
