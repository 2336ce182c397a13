//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not unimodular (determinant {0}, expected +1 or -1)")]
    NotUnimodular(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("requested precision unachievable: {0}")]
    PrecisionExhaustion(String),

    #[error("polynomial factorization out of desk range: {0}")]
    FactorOutOfRange(String),

    #[error("matrix is not ergodic: {0}")]
    NotErgodic(String),

    #[error("obstruction exceeds tolerance: max |O(v)| = {max_obstruction}, tol = {tol}")]
    ObstructionTooLarge { max_obstruction: f64, tol: f64 },

    #[error("frequency vector fixed by the unipotent direction: {0}")]
    FixedFrequency(String),

    #[error("orbit window exhausted before a minimal point was found: {0}")]
    WindowExhausted(String),

    #[error("fixed-point inversion is not a contraction: {0}")]
    ContractionFailure(String),

    #[error("smallness gate failed: {0}")]
    GateFailure(String),

    #[error("iteration diverged at step {iter}: {detail}")]
    Divergence { iter: usize, detail: String },

    #[error("grid too small: {0}")]
    GridTooSmall(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
