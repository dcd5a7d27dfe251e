use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex name {0:?} (expected a non-empty token over [A-Za-z0-9_.-])")]
    InvalidVertexName(String),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(String),
    #[error("self-loop on vertex {0}")]
    LoopEdge(String),
    #[error("edge {0}--{1} has an endpoint outside the vertex set")]
    UnknownEndpoint(String, String),
    #[error("edge {0}--{1} listed more than once")]
    DuplicateEdge(String, String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("join parts share vertex {0}; relabel one part first")]
    VertexCollision(String),
    #[error("second graph is not a subgraph of the first")]
    NotSubgraph,
    #[error("vertex {0} has incident edges but no label")]
    MissingLabel(String),
    #[error("label given for vertex {0}, which is not in the graph")]
    UnknownVertex(String),
    #[error("set label for {0} is empty")]
    EmptyLabel(String),
    #[error("set label for {0} is not strictly increasing")]
    NonIncreasingLabel(String),
    #[error("labeling is not an integer additive set-indexer")]
    NotIasi,
    #[error("support is not independent: edge {0}--{1} lies inside it")]
    NotIndependent(String, String),
    #[error("graph has {vertices} vertices, exhaustive solver is capped at {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("formula yields a negative value ({0})")]
    NegativeResult(i128),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
