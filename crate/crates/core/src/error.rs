use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} vertices, need at least {required}")]
    TooFewVertices { n: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex sequence: {0}")]
    InvalidSequence(String),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A search exhausted its node budget before reaching a verdict.
    #[error("search inconclusive for sequence {sequence:?}: node limit {limit} exhausted")]
    Inconclusive { sequence: Vec<usize>, limit: u64 },

    #[error("census file: {0}")]
    Census(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
