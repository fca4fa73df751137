use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list (line {line}): {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("set is not independent (edge {0}-{1})")]
    NotIndependent(usize, usize),

    #[error("set is not a maximum independent set")]
    NotMaximum,

    #[error("empty family of sets")]
    EmptyFamily,

    #[error("graph is not König-Egerváry")]
    NotKonigEgervary,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph of order {order} exceeds the limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("malformed decomposition script (line {line}): {message}")]
    Script { line: usize, message: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
