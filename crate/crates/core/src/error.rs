use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MegError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("no path between {0} and {1}")]
    NoPath(usize, usize),
    #[error("pair must consist of two distinct vertices, got ({0}, {0})")]
    SamePair(usize),
    #[error("instance too large: {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("interval {index} has left endpoint {left} greater than right endpoint {right}")]
    InvalidInterval { index: usize, left: i64, right: i64 },
    #[error("interval model does not induce the given graph")]
    ModelMismatch,
    #[error("set cover universe cannot be covered: {uncovered} elements left")]
    Uncoverable { uncovered: usize },
    #[error("vertex set is not an MEG-set of the graph")]
    NotMegSet,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("random generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is bipartite")]
    Bipartite,
}

pub type Result<T> = std::result::Result<T, MegError>;
