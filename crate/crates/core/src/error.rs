use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} given more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("graphs with {0} vertices are not supported (limit {max})", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("pd undefined for trivial graph")]
    TrivialGraph,
    #[error("the pair must consist of two distinct vertices, got {0} twice")]
    SamePair(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
