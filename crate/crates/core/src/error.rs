use std::io;

use thiserror::Error;

use crate::graph::VertexId;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected: vertices {first} and {second} lie in different components")]
    Disconnected { first: VertexId, second: VertexId },

    #[error("non-positive value {0} cannot be moved to log scale")]
    NonPositive(f64),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("invalid filtration: {0}")]
    Filtration(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }
}
