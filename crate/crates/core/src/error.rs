use thiserror::Error;

/// Errors reported by the graph algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("start vertex {0} belongs to the target set")]
    StartInTargets(usize),
    #[error("vertex order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("supplied triangulation is not a minimal triangulation of the graph")]
    NotMinimalTriangulation,
    #[error("graph is not a cograph: induced P4 {0:?}")]
    NotACograph([usize; 4]),
    #[error("not an induced path: {0}")]
    NotInducedPath(String),
    #[error("path length {k} exceeds the cap of {cap}")]
    PathLengthExceedsCap { k: usize, cap: usize },
    #[error("graph on {n} vertices exceeds the size cap of {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
