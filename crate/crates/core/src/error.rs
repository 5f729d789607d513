use thiserror::Error;

/// Errors raised by graph queries, topology generation and the CDS constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdsError {
    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    InvalidNode { node: usize, node_count: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("input set is not a connected dominating set")]
    NotValidCds,

    #[error("invalid generation parameters: {0}")]
    InvalidSpec(&'static str),

    #[error("no connected topology after {retries} retries")]
    GenerationFailed { retries: u32 },

    #[error("graph has {node_count} nodes, exceeding the oracle limit of {limit}")]
    TooLarge { node_count: usize, limit: usize },

    #[error("approximate size {approx} is below the exact minimum {exact}")]
    OracleViolation { approx: usize, exact: usize },
}

pub type Result<T, E = CdsError> = core::result::Result<T, E>;
