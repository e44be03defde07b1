use std::fmt;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidInput(String),
    /// A configurable size cap would be exceeded; the cap is reported so the
    /// caller can raise it deliberately.
    CapExceeded { requested: u64, cap: u64 },
    /// A value would not fit the supported integer width. Results are never
    /// silently wrapped.
    Overflow(String),
    /// A bounded search ran out of steps. This never claims nonexistence.
    SearchExhausted { steps: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "requested {requested} exceeds the configured cap {cap}")
            }
            Error::Overflow(what) => write!(f, "arithmetic overflow: {what}"),
            Error::SearchExhausted { steps } => {
                write!(f, "search exhausted after {steps} steps without finding a witness")
            }
        }
    }
}

impl std::error::Error for Error {}
