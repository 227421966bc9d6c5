use thiserror::Error;

/// Errors raised by the representation builders, checks and simulators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("unsupported algebra for {op}: {kind}")]
    UnsupportedKind { op: &'static str, kind: String },

    #[error("{check}: residual {residual:e} exceeds tolerance {tolerance:e}")]
    ToleranceBreach {
        check: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("eigenphase unwrapping collision at level {0}")]
    PhaseCollision(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
