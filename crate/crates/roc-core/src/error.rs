//! Crate-wide error type.

/// Errors produced by graph construction, parsing, generation, and fitting.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A vertex index is not in `[0, n)`.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },

    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(u64),

    /// A generator or analysis parameter failed validation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Malformed edge-list or community-log input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A requested inversion has no solution; the message names the
    /// feasible interval for the pinned parameter.
    #[error("no solution: {0}")]
    Unsolvable(String),

    /// Brute-force enumeration refused a graph that is too large.
    #[error("graph too large for brute-force enumeration: n={n} exceeds {max}")]
    BruteForceGuard { n: usize, max: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
