use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("degree is undefined on the empty graph")]
    EmptyGraph,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid Kneser label: {0}")]
    InvalidLabel(String),

    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ColoringLength { expected: usize, got: usize },

    #[error("color class {0} is empty")]
    EmptyColorClass(usize),

    #[error("map covers {got} vertices but the source graph has {expected}")]
    MapLength { expected: usize, got: usize },

    #[error("graph mismatch: {0}")]
    GraphMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0}")]
    Io(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
