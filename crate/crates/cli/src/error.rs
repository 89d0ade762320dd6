use std::fmt;

use matlis_core::Error as CoreError;
use serde::Serialize;
use thiserror::Error;

/// Line and column of a script position, both starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorCode {
    Syntax,
    UnknownName,
    DuplicateName,
    TypeMismatch,
    RingMismatch,
    Scope,
    MalformedPolynomial,
    InvalidArgument,
    Computation,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "E01",
            ErrorCode::UnknownName => "E02",
            ErrorCode::DuplicateName => "E03",
            ErrorCode::TypeMismatch => "E04",
            ErrorCode::RingMismatch => "E05",
            ErrorCode::Scope => "E06",
            ErrorCode::MalformedPolynomial => "E07",
            ErrorCode::InvalidArgument => "E08",
            ErrorCode::Computation => "E09",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: error[{}]: {message}", code.as_str())]
pub struct ScriptError {
    pub code: ErrorCode,
    pub pos: Pos,
    pub message: String,
}

impl ScriptError {
    pub fn new(code: ErrorCode, pos: Pos, message: impl Into<String>) -> Self {
        ScriptError { code, pos, message: message.into() }
    }

    /// Maps a library error raised while executing the statement at `pos`.
    pub fn from_core(err: CoreError, pos: Pos) -> Self {
        let code = match &err {
            CoreError::Parse(_) => ErrorCode::MalformedPolynomial,
            CoreError::RingMismatch(_) => ErrorCode::RingMismatch,
            CoreError::Scope(_) => ErrorCode::Scope,
            CoreError::Inhomogeneous(_) | CoreError::InvalidArgument(_) | CoreError::Malformed(_) => ErrorCode::InvalidArgument,
            CoreError::Arith(_) => ErrorCode::Computation,
        };
        ScriptError::new(code, pos, err.to_string())
    }
}

pub type ScriptResult<T> = std::result::Result<T, ScriptError>;
