use thiserror::Error;

/// Errors raised by the arithmetic, series and family layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient index {needed} exceeds truncation order {order}")]
    InsufficientOrder { needed: usize, order: usize },

    #[error("constant term is not invertible")]
    NotInvertible,

    #[error("constant term must be {expected}")]
    ConstantTerm { expected: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index r = {r} exceeds n = {n}")]
    IndexOutOfRange { r: usize, n: usize },

    #[error("operation undefined in classical (q = 1) mode")]
    ClassicalMode,

    #[error("mean E[Y] is zero; v/(M - 1) is undefined")]
    ZeroMean,
}

pub type Result<T> = std::result::Result<T, Error>;
