use thiserror::Error;

use crate::field::ArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("out of scope: {0}")]
    Scope(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
