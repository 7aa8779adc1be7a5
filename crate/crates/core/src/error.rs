use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("invalid level: {0}")]
    InvalidLevel(String),

    #[error("invalid monopole parameters: {0}")]
    InvalidParams(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("no factorization: {0}")]
    NoFactorization(String),

    #[error("factorization underdetermined: {0}")]
    Underdetermined(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("no finite-difference stencil for derivative order {0} (max 4)")]
    StencilUnsupported(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
