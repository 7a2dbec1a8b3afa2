use std::fmt;

/// Error type shared by every module of the crate.
#[derive(Debug)]
pub enum Error {
    /// Vector lengths or matrix shapes do not line up.
    Dimension(String),
    /// A value violates a structural invariant (non-finite weight, empty layer, ...).
    Invalid(String),
    /// A gradient was requested through a threshold layer.
    NonDifferentiable,
    /// A document (model file, dataset, shape spec, vector literal) could not be parsed.
    Parse(String),
    /// A model file declares a format version this build does not understand.
    Version(u32),
    /// Underlying I/O failure.
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::Invalid(msg) => write!(f, "invalid value: {msg}"),
            Error::NonDifferentiable => {
                write!(
                    f,
                    "threshold layers are not differentiable; the network cannot be trained"
                )
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Version(v) => write!(f, "unsupported model format version {v}"),
            Error::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}
