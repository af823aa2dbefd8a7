use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("series reversion needs f(0) = 0 and an invertible linear coefficient")]
    NotReversible,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("truncated series orders differ and the operation requires order {needed}, got {have}")]
    OrderTooSmall { needed: usize, have: usize },
    #[error("invalid Riordan array: {0}")]
    InvalidRiordan(&'static str),
    #[error("index ({n}, {k}) outside the available block of order {order}")]
    IndexOutOfRange { n: usize, k: usize, order: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("`{0}` needs constant recurrence coefficients")]
    RouteInapplicable(&'static str),
    #[error("continued fraction has {have} levels but order {order} needs {needed}")]
    InsufficientLevels { order: usize, needed: usize, have: usize },
    #[error("need {needed} moments, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("Hankel determinant vanishes at depth {0}")]
    VanishingHankel(usize),
    #[error("vanishing Toeplitz denominator at n = {0}")]
    VanishingToeplitz(usize),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("parse error: {0}")]
    Parse(String),
}
