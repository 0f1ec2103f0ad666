use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polygon too small: n = {0}, need n >= 4")]
    PolygonTooSmall(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded for {what}: n = {n}, limit is {limit}")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent routes to the same quantity disagree. This is a bug,
    /// not a user error.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
