use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("labeled pair {0}-{1} is not an edge of the graph")]
    UnknownEdge(Vertex, Vertex),

    #[error("invalid label list on {0}-{1}: {2}")]
    InvalidLabels(Vertex, Vertex, String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a DAG")]
    NotADag,

    #[error("temporal graph is not temporally connected")]
    NotTemporallyConnected,

    #[error("call on non-edge {0}-{1}")]
    CallOnNonEdge(Vertex, Vertex),

    #[error("empty terminal set")]
    EmptyTerminals,

    #[error("instance too large for exact oracle ({slots} slots, cap {cap})")]
    TooLarge { slots: usize, cap: usize },

    #[error("infeasible at this age bound (age {0})")]
    Infeasible(u32),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
