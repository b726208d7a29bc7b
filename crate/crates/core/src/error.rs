use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("exponent overflow")]
    Overflow,

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("ideal is not equigenerated")]
    NotEquigenerated,

    #[error("invalid generator order: {0}")]
    InvalidOrder(String),

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} exceeds the cap of {limit}")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("random draw budget exhausted after {0} attempts")]
    BudgetExhausted(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal disagreement: {0}")]
    Internal(String),
}
