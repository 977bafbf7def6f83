//! Error type shared by all analysis modules.

use std::fmt;
use std::io;

/// Errors produced by ingest, graph construction, and the statistics modules.
#[derive(Debug)]
pub enum Error {
    /// Underlying I/O failure (unreadable source, broken pipe, ...).
    Io(io::Error),
    /// The input file is structurally unusable (bad header, bad JSON header line).
    Format(String),
    /// A node index outside `[0, N)` was passed to a per-node accessor.
    NodeOutOfRange { node: usize, n: usize },
    /// Too few points above the candidate lower bound to fit a tail.
    InsufficientTail { needed: usize, got: usize },
    /// A fit or statistic needs more input than was supplied.
    InsufficientData(String),
    /// All tail values equal the lower bound; the likelihood has no finite maximum.
    DivergentEstimate,
    /// The requested statistic is undefined on this input (e.g. assortativity
    /// of a regular graph, path length of a single node).
    Undefined(&'static str),
    /// A parameter violates its documented precondition.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io(e) => write!(f, "i/o error: {e}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::NodeOutOfRange { node, n } => {
                write!(f, "node index {node} out of range (N = {n})")
            }
            Error::InsufficientTail { needed, got } => {
                write!(f, "insufficient tail: need {needed} points, have {got}")
            }
            Error::InsufficientData(msg) => write!(f, "insufficient data: {msg}"),
            Error::DivergentEstimate => {
                write!(f, "divergent estimate: all tail values equal the lower bound")
            }
            Error::Undefined(what) => write!(f, "{what} is undefined for this input"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that indicate unusable input files rather than
    /// analysis-level problems. The CLI maps these to a distinct exit code.
    pub fn is_io_or_format(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Format(_))
    }
}
