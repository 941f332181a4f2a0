use std::path::PathBuf;

/// Errors raised by construction, evaluation and analysis.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: denominator vanishes at x = {x}")]
    Pole { x: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("degenerate system: {0}")]
    Degenerate(String),

    #[error("analysis error: {0}")]
    Analysis(String),

    #[error("iteration {step} hit a pole")]
    Iteration { step: usize },

    #[error("unsupported expansion center {0}; only 1 is supported")]
    UnsupportedCenter(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage(_) | Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
