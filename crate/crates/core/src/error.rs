use thiserror::Error;

/// Errors raised by the evaluators and their building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("expected {expected} substitution images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },

    #[error("cannot substitute a non-unit for x{var}, which occurs with a negative exponent")]
    NonUnitSubstitution { var: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has {len} entries, expected {rows}x{cols}")]
    MatrixShape { rows: usize, cols: usize, len: usize },

    #[error("Pfaffian requires even size, got {0}")]
    OddSize(usize),

    #[error("matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("not a strict partition: {0}")]
    NotStrict(String),

    #[error("partition has {length} parts but only {vars} variables are available")]
    TooManyParts { length: usize, vars: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
