use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands were built at different truncation orders or weights.
    #[error("truncation mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request exceeds a fixed computational cap.
    #[error("{what} {requested} exceeds the cap of {cap}")]
    Resource {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not connected")]
    Disconnected,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An internal self-check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
