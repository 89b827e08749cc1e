use thiserror::Error;

/// Errors produced by graph construction, validation, and the size-capped
/// canonicalization and enumeration routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SgError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("order {0} exceeds supported maximum {1}")]
    OrderTooLarge(usize, usize),
    #[error("graph is not complete")]
    NotComplete,
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
    #[error("graph is not self-complementary")]
    NotSelfComplementary,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, SgError>;
