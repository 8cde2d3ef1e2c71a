use thiserror::Error;

/// Errors raised by the algebra and tableau layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quotient is not a Laurent polynomial: {num} / {den}")]
    NotDivisible { num: String, den: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation at t = 0 of a polynomial with negative exponents")]
    PoleAtZero,

    #[error("invalid column length {len} for n = {n}")]
    InvalidLength { len: usize, n: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("rank mismatch: n = {0} vs n = {1}")]
    RankMismatch(usize, usize),

    #[error("{0} is not contained in {1}")]
    NotContained(String, String),

    #[error("{0} / {1} is not a horizontal strip")]
    NotAStrip(String, String),

    #[error("filling {0} is not semistandard")]
    NotSemistandard(String),

    #[error("column lengths must weakly decrease from left to right: {0:?}")]
    ColumnOrder(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u8>),

    #[error("invalid column {0:?} for n = {1}")]
    InvalidColumn(Vec<u8>, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("refusing to enumerate S_{n}: limit is {limit} (set HLP_MAX_N to override)")]
    TooLarge { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
