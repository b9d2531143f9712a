use thiserror::Error;

/// Errors raised by the algebra and combinatorics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-polynomial operation: {0}")]
    NonPolynomial(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("insufficient variables: partition of length {length} needs at least that many arguments, got {available}")]
    InsufficientVariables { length: usize, available: usize },

    #[error("degenerate arguments: {0}")]
    DegenerateArguments(String),

    #[error("parameter index {index} out of range (sequence has {len} entries)")]
    ParamOutOfRange { index: usize, len: usize },

    #[error("input is not symmetric in x1..x{genus}: {reason}")]
    NonSymmetric { genus: u32, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("malformed index sequence: {0}")]
    MalformedSequence(String),

    #[error("sequence not in H': {0}")]
    NotInHPrime(String),

    #[error("not a numerical semigroup: {0}")]
    NotASemigroup(String),

    #[error("partition {partition} has length {length} > genus {genus}")]
    LengthExceedsGenus { partition: String, length: usize, genus: u32 },

    #[error("invalid genus: {0}")]
    InvalidGenus(String),

    #[error("genus {genus} exceeds the configured maximum {max}")]
    GenusTooLarge { genus: u32, max: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
