use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on the arguments does not hold.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request does not fit the fixed-width representation or a configured cap.
    #[error("capacity error: {what} ({requested} > {limit})")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// Power iteration ran out of budget before reaching the requested tolerance.
    #[error("precision error: certified error {achieved:e} exceeds tolerance {requested:e}")]
    Precision { achieved: f64, requested: f64 },
    /// Certified intervals overlap and no exact path is available.
    #[error("undecidable comparison: {0}")]
    Undecidable(String),
    /// A floating-point precondition could not be decided either way.
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
