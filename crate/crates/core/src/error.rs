use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid basis {{1,{a2},{a3}}}: need 1 < a2 < a3")]
    InvalidBasis { a2: i64, a3: i64 },
    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("{0}")]
    Rejected(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Range { what, detail: detail.into() }
    }
}
