use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {n} vertices, above the capacity of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("graph has {m} edges, above the edge cap of {cap}")]
    EdgeCapacity { m: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph6 format error: {0}")]
    Format(String),

    #[error("edge list error: {0}")]
    EdgeList(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid partition: {0}")]
    Partition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    /// Whether this error is a size/capacity limit rather than bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::EdgeCapacity { .. })
    }
}
