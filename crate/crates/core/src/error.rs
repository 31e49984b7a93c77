use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("class is not big: {0}")]
    NotBig(String),
    #[error("sequence cannot come from nef and big classes: {0}")]
    UnrealizableSequence(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("unbounded: {0}")]
    Unbounded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
