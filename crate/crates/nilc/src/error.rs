use thiserror::Error;

/// Domain errors. The `Display` form starts with the error name so the CLI
/// can echo it verbatim.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("InvalidRank: {0}")]
    InvalidRank(String),
    #[error("NotARoot: {0}")]
    NotARoot(String),
    #[error("NotStronglyOrthogonal: {0}")]
    NotStronglyOrthogonal(String),
    #[error("NonUniqueMaximum: {0}")]
    NonUniqueMaximum(String),
    #[error("CascadeMismatch: {0}")]
    CascadeMismatch(String),
    #[error("ChainMismatch: {0}")]
    ChainMismatch(String),
    #[error("NotInCatalogue: {0}")]
    NotInCatalogue(String),
    #[error("EmptySet: {0}")]
    EmptySet(String),
    #[error("HeightOutOfRange: {0}")]
    HeightOutOfRange(String),
    #[error("NotInOrtX: {0}")]
    NotInOrtX(String),
    #[error("NotADescent: {0}")]
    NotADescent(String),
    #[error("TooLong: {0}")]
    TooLong(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
