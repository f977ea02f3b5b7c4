use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-pair ({0}, {0}) is not a valid arc")]
    SelfPair(String),

    #[error("arc ({0}, {1}) joins two vertices of the same color")]
    ImproperColoring(String, String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex sets differ: {0}")]
    VertexMismatch(String),

    #[error("graph is not a best match graph")]
    NotABmg,

    #[error("{op} refuses inputs with {size} vertices (limit {limit})")]
    TooLarge {
        op: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
