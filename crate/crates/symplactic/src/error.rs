use thiserror::Error;

/// Library-wide error type.
///
/// `Internal` is reserved for broken invariants that the underlying theory
/// rules out; hitting one means the implementation (not the input) is wrong.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),

    #[error("letter {value} out of range for rank {rank}")]
    LetterOutOfRange { value: i64, rank: u8 },

    #[error("not a column word: {0}")]
    NotAColumn(String),

    #[error("column {0} is not admissible")]
    NotAdmissible(String),

    #[error("column {0} is not coadmissible")]
    NotCoadmissible(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration exceeded cap of {0} items")]
    CapExceeded(usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for invariant violations, false for plain input/validation errors.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
