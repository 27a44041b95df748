use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A caller-supplied parameter violates an operation's precondition.
    InvalidArgument(String),
    /// Two vectors or matrices disagree on their dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// A matrix entry is NaN or infinite.
    NonFinite { row: usize, col: usize },
    DuplicateToken(String),
    /// Correlation is undefined: too few values or zero rank variance.
    UndefinedCorrelation(String),
    /// The eigen-solver did not converge.
    NoConvergence,
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for errors caused by the input data rather than by parameters.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::UndefinedCorrelation(_) | Error::NoConvergence | Error::NonFinite { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonFinite { row, col } => {
                write!(f, "non-finite value at row {row}, column {col}")
            }
            Error::DuplicateToken(t) => write!(f, "duplicate token {t:?}"),
            Error::UndefinedCorrelation(why) => write!(f, "undefined correlation: {why}"),
            Error::NoConvergence => f.write_str("eigen-solver failed to converge"),
        }
    }
}

impl core::error::Error for Error {}
