use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the allowed range {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },
    #[error("hypothesis m_W <= N violated: m_W = {max_len}, N = {n}")]
    LengthExceedsN { max_len: usize, n: u128 },
    #[error("Poisson mean must be positive, got {0}")]
    NonPositiveMean(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("truncation {truncation} leaves tail mass {tail:e} above 1e-10")]
    TailTooLarge { truncation: u32, tail: f64 },
    #[error("empty sample")]
    EmptySample,
    #[error("invalid word {0:?}: only the letters L and R are allowed")]
    InvalidWord(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error is a violated precondition on user input (as opposed
    /// to an internal or I/O failure).
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Json(_) | Error::Internal(_))
    }

    pub(crate) fn out_of_range(what: &'static str, value: impl ToString, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
            range: range.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
