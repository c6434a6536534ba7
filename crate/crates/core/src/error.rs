use thiserror::Error;

/// Errors raised by graph construction and the analysis pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("vertex {0} is out of range for a graph of order {1}")]
    NoSuchVertex(usize, usize),
    #[error("graph is disconnected: vertex {unreached} is not reachable from {root}")]
    Disconnected { root: usize, unreached: usize },
    #[error("invalid rotation at vertex {0}: not a permutation of its neighbours")]
    InvalidRotation(usize),
    #[error("dual is not simple: {0}")]
    NonSimpleDual(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("graph order {0} does not exceed k = {1}")]
    OrderTooSmall(usize, usize),
    #[error("malformed path system: {0}")]
    MalformedPaths(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("cannot encode graph: {0}")]
    Encode(String),
    #[error("level cache for size {level} is corrupt: {reason}")]
    CacheCorrupt { level: usize, reason: String },
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
