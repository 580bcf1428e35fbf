use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed tableau source (syntax level), with position information
    /// when the underlying parser provides it.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input that violates a tableau invariant.
    #[error("schema error: {0}")]
    Schema(String),

    /// A mapping, input, or constraint name that does not resolve.
    #[error("lookup error: {0}")]
    Lookup(String),

    /// Vectors of mismatched length fed to a geometric predicate.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// An operation invoked outside its domain (e.g. hull of nothing).
    #[error("domain error: {0}")]
    Domain(String),

    /// Prosodic or segmental notation that does not parse.
    #[error("notation error: {0}")]
    Notation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }
    pub fn lookup(msg: impl Into<String>) -> Self {
        Error::Lookup(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn notation(msg: impl Into<String>) -> Self {
        Error::Notation(msg.into())
    }
}
