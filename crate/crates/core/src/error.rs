use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps `Domain` to a usage error, `Resource` to the resource-cap
/// exit code and everything else to a generic failure.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// A mathematical invariant that must hold failed; indicates a bug.
    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
