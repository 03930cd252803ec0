use thiserror::Error;

/// Errors surfaced by index construction, queries, and (de)serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A serialized structure failed a magic/length/checksum test.
    #[error("corrupt data: {0}")]
    Corrupt(String),

    /// Caller handed us something we cannot work with.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two structures that must agree do not (cross-checks, verify runs,
    /// merge placement invariants).
    #[error("verification mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
