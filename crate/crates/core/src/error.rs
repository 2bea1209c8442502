use thiserror::Error;

/// Errors produced while reading a matrix from one of the interchange formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: no matrix rows found")]
    Empty,
    #[error("ragged input: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("negative entry at row {row}, column {col}")]
    Negative { row: usize, col: usize },
    #[error("matrix is not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    Asymmetric { row: usize, col: usize },
    #[error("invalid entry {token:?} at row {row}, column {col}")]
    InvalidEntry {
        row: usize,
        col: usize,
        token: String,
    },
    #[error("invalid json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid family key: n = {n}, k = {k} (need 1 <= k <= n)")]
    InvalidKey { n: usize, k: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),
    #[error("matrix is not a member of any family T(n,k): {0}")]
    NotInFamily(&'static str),
    #[error("the zero-diagonal alternating sum identity is stated for even n only, got n = {0}")]
    OddCorollary(usize),
    #[error("internal defect: {0}")]
    Defect(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
