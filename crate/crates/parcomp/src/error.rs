use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),

    /// Tripped when root generation fails to terminate at a sane size, which
    /// means the input Cartan data was not of finite type.
    #[error("root generation exceeded {cap} roots; Cartan data is not of finite type")]
    RootClosureOverflow { cap: usize },

    #[error("element is not in the coordinate model: {0}")]
    ModelMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rank {rank} exceeds the exhaustive enumeration guard ({limit})")]
    EnumerationGuard { rank: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
