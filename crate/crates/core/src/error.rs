use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("vertex id {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("level {level} outside supported range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("coloring is improper: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("coloring covers {got} vertices, graph has {n}")]
    ColoringSize { got: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("duplicate id {0}")]
    DuplicateId(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
