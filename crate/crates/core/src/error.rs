use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Param(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("capacity error: {0}")]
    Capacity(String),
    #[error("guard not satisfied: {0}")]
    Guard(String),
    #[error("missing constant: {0}")]
    Lookup(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Param(_) | Error::Guard(_) | Error::Capacity(_) | Error::Resource(_) | Error::Lookup(_) => 2,
            Error::Parse { .. } | Error::Io(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Param(msg.into()))
}
