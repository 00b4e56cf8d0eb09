use alloc::string::String;
use core::fmt;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain.
    InvalidArgument(String),
    /// A size cap was exceeded.
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// The operation needs at least one edge.
    NoEdges,
    /// The pattern has no vertices.
    EmptyPattern,
    /// A hypothesis of a theorem-backed operation does not hold.
    ConditionFailed { condition: String, detail: String },
    /// An exhaustive search found no admissible graph.
    NoFeasibleGraph,
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Self {
        Error::CapExceeded { what, limit, got }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::CapExceeded { what, limit, got } => {
                write!(f, "{what} is {got}, above the cap of {limit}")
            }
            Error::NoEdges => f.write_str("graph has no edges"),
            Error::EmptyPattern => f.write_str("pattern has no vertices"),
            Error::ConditionFailed { condition, detail } => {
                write!(f, "condition failed: {condition} ({detail})")
            }
            Error::NoFeasibleGraph => f.write_str("no admissible graph exists for this query"),
        }
    }
}

impl core::error::Error for Error {}
