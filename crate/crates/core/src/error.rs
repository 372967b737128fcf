use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero argument where a nonzero rational is required")]
    ZeroInput,
    #[error("{0} is not a prime")]
    InvalidPlace(BigInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not a unit")]
    NotAUnit,
    #[error("matrix has determinant {0}, expected 1")]
    NotSpecialLinear(String),
    #[error("element is not congruent to the identity modulo 4")]
    NotInK4,
    #[error("element does not lie in K0")]
    NotInK0,
    #[error("label {0} does not support a Hecke function")]
    UnsupportedLabel(String),
    #[error("element is not invertible in the Hecke algebra")]
    NotInvertible,
    #[error("precision {got} is too low, need at least {needed}")]
    PrecisionTooLow { needed: usize, got: usize },
    #[error("image could not be re-expressed in the monomial basis")]
    ReexpressionFailed,
    #[error("form does not satisfy the plus-space condition at n = {0}")]
    PlusConditionViolated(usize),
    #[error("weight parameter r = {0} must be odd and at least 1")]
    InvalidWeight(i64),
    #[error("integral weight {0} is not supported")]
    UnsupportedWeight(i64),
    #[error("expected a one-dimensional eigenspace, found dimension {0}")]
    EigenspaceDimension(usize),
    #[error("evaluation point too close to the real axis, tail bound {0:e}")]
    TailBound(f64),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("series requested for a function with a pole at 0")]
    PoleAtZero,
    #[error("j must be 2 or -1, got {0}")]
    InvalidIndex(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
