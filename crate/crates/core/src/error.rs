use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must be nonempty")]
    Empty,

    #[error("length {len} exceeds the supported maximum {max}")]
    TooLong { len: usize, max: usize },

    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("value {value} at position {position} is not a unit of the alphabet")]
    InvalidValue { value: i64, position: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{what} must be odd, got {value}")]
    NotOdd { what: &'static str, value: usize },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("array is not normalized: entry at the identity is -1")]
    NotNormalized,

    #[error("index {index} outside {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("duplicate element {element} in subset (mod {m})")]
    DuplicateElement { element: usize, m: usize },

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("pair is not an ASDS or SDS")]
    NotAsds,

    #[error("sequence is not an optimal quaternary sequence")]
    NotOqs,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("enumeration of {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("{0}")]
    Usage(String),
}
