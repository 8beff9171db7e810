use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: expected two node labels, found {found} token(s)")]
    Parse { line: usize, found: usize },

    #[error("line {line}: self-loop on node `{label}`")]
    SelfLoop { line: usize, label: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("node id {id} out of range for a graph with {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// A nested-count subtraction went below zero. Never expected on a
    /// valid simple graph; reported instead of wrapping.
    #[error("nested count {0} became negative")]
    NegativeCount(&'static str),

    #[error("C({b}) is undefined: the graph has no {b}-node spanning trees")]
    UndefinedCoefficient { b: usize },

    #[error("clique enumeration stopped after exceeding the cap of {cap} maximal cliques")]
    CliqueCap { cap: usize },

    #[error("no connected G({n}, {p}) sample within {tries} attempt(s)")]
    Sampling { n: usize, p: f64, tries: usize },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
