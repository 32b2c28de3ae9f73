use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("edge id {0} out of range (graph has {1} edges)")]
    InvalidEdge(usize, usize),

    #[error("source and sink sets overlap")]
    OverlappingTerminals,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not {0}-edge-connected")]
    NotLambdaConnected(usize),

    #[error("not enough witness edges: |D(e)| = {have}, need at least {need}")]
    InsufficientWitnesses { have: usize, need: usize },

    #[error("enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A theorem-backed postcondition failed; this is a defect, not an input
    /// problem, and maps to its own exit code.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
