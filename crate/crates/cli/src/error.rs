use thiserror::Error;

use crate::expr::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Algebra(#[from] idinf::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for malformed input, 4 for overflow, 5 for an enumeration above the
    /// materialisation cutoff.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Algebra(idinf::Error::Overflow(_)) => 4,
            CliError::Algebra(idinf::Error::TooManySolutions { .. }) => 5,
            CliError::Algebra(idinf::Error::EmptyWindow) => 2,
        }
    }
}
