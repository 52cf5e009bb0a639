use thiserror::Error;

/// Errors produced by constructors and checked operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix entry `{name}` is not finite ({value})")]
    NonFinite { name: &'static str, value: f64 },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("invalid oracle configuration: {0}")]
    InvalidConfig(String),

    #[error("eigenvector must be nonzero")]
    ZeroVector,

    #[error("matrix is not symmetric (|b - c| = {0})")]
    Asymmetric(f64),

    #[error("a preserver with beta = {0} does not act on symmetric matrices")]
    NotSymmetricPreserver(f64),

    #[error("linear map coefficient is not finite")]
    NonFiniteCoefficient,

    #[error("expected basis \"{expected}\", found \"{found}\"")]
    BasisMismatch {
        expected: &'static str,
        found: String,
    },

    #[error(
        "computed an empty L-spectrum for {0}; every 2x2 matrix has at least one L-eigenvalue"
    )]
    EmptySpectrum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
