use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty graph has no degrees")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("cells do not partition the vertex set: {0}")]
    NotPartition(String),
    #[error("partition is not equitable: vertex {vertex} has a different neighbor count into cell {cell}")]
    NotEquitable { vertex: usize, cell: usize },
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("eigenvalue mismatch: quotient {quotient} vs full matrix {full} (tolerance {tol:e})")]
    EigenMismatch { quotient: f64, full: f64, tol: f64 },
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
