use thiserror::Error;

use crate::field::Field;
use crate::labels::{format_set, Label, LabelSet};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    DescriptorMismatch(Field, Field),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("invalid label {0:?}")]
    InvalidLabel(String),

    #[error("duplicate label {0}")]
    DuplicateLabel(Label),

    #[error("label {0} not found")]
    LabelNotFound(Label),

    #[error("matrix is not square (row and column labels differ)")]
    NotSquare,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    /// The principal block `A[Z,Z]` has no inverse.
    #[error("pivot block on {} is singular (rank {rank} of {})", format_set(.pivot), .pivot.len())]
    PivotSingular { pivot: LabelSet, rank: usize },

    #[error("index set of size {size} exceeds the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
