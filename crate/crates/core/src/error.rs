use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the HVI library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("value {value} outside input domain [{min}, {max}]")]
    OutOfDomain { value: f64, min: f64, max: f64 },

    #[error("image {width}x{height} is smaller than the {window}x{window} window")]
    TooSmall {
        width: usize,
        height: usize,
        window: usize,
    },

    #[error("reference image has zero mean luma")]
    ZeroMeanReference,

    #[error("empty input")]
    Empty,

    #[error("inconsistent padding record: {0}")]
    Padding(String),

    #[error("malformed HVI1 tensor: {0}")]
    Tensor(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {msg}", path.display())]
    Decode { path: PathBuf, msg: String },

    #[error("{}: {msg}", path.display())]
    Encode { path: PathBuf, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for failures that originate from the filesystem or a codec.
    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Decode { .. } | Error::Encode { .. }
        )
    }
}
