use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partitions do not sum to the same integer: {left} vs {right}")]
    MismatchedSums { left: u64, right: u64 },

    #[error("resource guard: {what} = {requested} exceeds the configured bound {limit}")]
    ResourceBound {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("expected an orientable manifold model, got {0}")]
    NonOrientableInput(String),

    #[error("expected a non-orientable manifold model, got {0}")]
    OrientableInput(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
