//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by polynomial construction and zero analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("undefined gcd: both inputs are the zero polynomial")]
    GcdOfZeroes,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("index underflow for standard normalization: n = {n} < K = {k}")]
    IndexUnderflow { n: usize, k: usize },

    #[error("degenerate leading coefficient: s = -2")]
    DegenerateLeadingCoefficient,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parameters must be distinct")]
    RepeatedParameters,

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("interval not isolating: {0}")]
    NotIsolating(String),

    #[error("root finding did not converge after {iterations} iterations (best residual {best_residual:e})")]
    NonConvergence { iterations: u32, best_residual: f64 },

    #[error("sequences share a zero")]
    SharedZero,

    #[error("ceiling {ceiling} exceeded before the non-real count threshold was reached")]
    CeilingExceeded { ceiling: usize },

    #[error("degenerate triple: the Turan determinant is identically zero")]
    DegenerateTriple,

    #[error("unknown test function: {0}")]
    UnknownTestFunction(String),

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
