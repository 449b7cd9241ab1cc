use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension {0} unsupported (must be between 1 and {max})", max = crate::algebra::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),

    #[error("inexact division by x_{index}: internal operator error")]
    InexactDivision { index: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("exponent overflow in monomial")]
    ExponentOverflow,

    #[error("vanishing Pochhammer denominator: {0}")]
    VanishingDenominator(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("input depends on forbidden variable x_{0}")]
    ForbiddenVariable(usize),

    #[error("zero pivot parameter mu_{0}")]
    ZeroPivot(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("{0}")]
    Structure(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
