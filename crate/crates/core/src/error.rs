use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole at {location}")]
    Pole { location: f64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operation needs a finite graph, got the infinite lattice Z^{0}")]
    InfiniteGraph(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not regular: degrees {min}..{max}")]
    NotRegular { min: usize, max: usize },
    #[error("size limit exceeded: {what} = {actual} > {limit}")]
    Resource {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("integral diverges: {0}")]
    Divergent(String),
    #[error("series truncation N = {n} leaves a tail bound {bound:e} above 1e-10")]
    TruncationTooShort { n: usize, bound: f64 },
}

/// Coarse error classes, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Domain,
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Resource { .. } => ErrorKind::Resource,
            Error::InfiniteGraph(_) | Error::Unsupported(_) | Error::InvalidGraph(_) => {
                ErrorKind::Usage
            }
            _ => ErrorKind::Domain,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
