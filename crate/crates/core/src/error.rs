use thiserror::Error;

use crate::rational::{Rational, RationalError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error("instance has no sticks")]
    NoSticks,
    #[error("target count k must be at least 1")]
    ZeroTarget,
    #[error("stick {index}: non-positive length {length}")]
    NonPositiveLength { index: usize, length: Rational },
    #[error("rank {rank} out of range for a multiset of size {len}")]
    RankOutOfRange { rank: u64, len: usize },
    #[error("restriction is not admissible: adjusted rank {k_prime} outside [1, {size}]")]
    Inadmissible { k_prime: i128, size: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
