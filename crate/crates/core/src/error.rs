use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid graph6: {0}")]
    Graph6(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("vertex {0} is isolated; degrees must be positive")]
    IsolatedVertex(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
