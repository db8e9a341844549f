use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input point set is empty")]
    EmptyInput,

    #[error("coordinate {value} exceeds the supported magnitude 2^40")]
    CoordinateOutOfRange { value: i64 },

    #[error("negative coordinate {value} cannot be mapped onto a bounded instance")]
    NegativeCoordinate { value: i64 },

    #[error("range W = {w} is too small for {n} distinct values (need W >= n - 1)")]
    RangeTooSmall { n: usize, w: u64 },

    #[error("{what} needs {requested} cells, above the budget of {budget}{hint}")]
    BudgetExceeded {
        what: &'static str,
        requested: u64,
        budget: u64,
        hint: &'static str,
    },

    #[error("array is not non-increasing at index {index}")]
    MonotonicityViolated { index: usize },

    #[error("sequence is not convex at index {index}")]
    ConvexityViolated { index: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
