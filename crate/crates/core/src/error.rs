//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by ensemble design, graph construction, decoding and IO.
#[derive(Debug, Error)]
pub enum Error {
    /// A degree distribution failed validation (fractions, degrees, sums).
    #[error("invalid degree distribution: {0}")]
    InvalidDistribution(String),

    /// The ensemble cannot realize a code (negative design rate, unreachable
    /// check sockets, mismatched layer counts, ...).
    #[error("infeasible ensemble: {0}")]
    InfeasibleEnsemble(String),

    /// Variable and check sides must carry the same number of distinct degrees
    /// to be paired into layers.
    #[error("layer cardinality mismatch: {variable} variable degrees vs {check} check degrees")]
    CardinalityMismatch { variable: usize, check: usize },

    /// Graph construction failed (unsatisfiable plan, dead-end placement).
    #[error("construction failed: {0}")]
    Construction(String),

    /// A graph-level contract violation (parallel edge, inconsistent adjacency,
    /// out-of-range index).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Operand lengths do not match the graph dimensions.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Two densities live on different grids.
    #[error("grid mismatch between operands")]
    GridMismatch,

    /// Crossover probability outside [0, 1/2].
    #[error("crossover probability {0} outside [0, 0.5]")]
    InvalidCrossover(f64),

    /// An operation-specific argument was out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Threshold bisection could not bracket a success/failure pair in (0, 0.5).
    #[error("no threshold bracket found in (0, 0.5): {0}")]
    NoBracket(String),

    /// Channel LLR input contained NaN or an infinity.
    #[error("non-finite channel LLR at position {0}")]
    NonFiniteLlr(usize),

    /// A text format (alist, ensemble JSON, sidecar) failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
