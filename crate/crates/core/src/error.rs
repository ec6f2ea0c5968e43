use thiserror::Error;

/// Errors raised by the exact operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coordinate or shift left the range of `i64`.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// Materialising an enumeration would exceed the configured cutoff.
    #[error("enumeration has 2^{free} members, above the limit of {limit}")]
    TooManySolutions { free: usize, limit: usize },

    /// A window half-width must be at least 1.
    #[error("window half-width must be positive")]
    EmptyWindow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
