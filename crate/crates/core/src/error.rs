use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what}: value {value} outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("{what} needs n <= {cap}, graph has n = {n}")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("more than {cap} geodesics between vertices {u} and {v}")]
    GeodesicOverflow { u: usize, v: usize, cap: usize },

    #[error("search limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("duplicate packing member {0}")]
    DuplicateMember(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("optimization exceeded {cap} rounds (phi history {history:?})")]
    RoundCap { cap: u64, history: Vec<u64> },

    #[error("invalid half-integer {0:?}")]
    InvalidHalfInt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
