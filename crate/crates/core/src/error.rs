use thiserror::Error;

use crate::greedy::StepRecord;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("minimum degree parameter must be at least {min}, got {got}")]
    DegreeTooSmall { got: usize, min: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("vertex {vertex} has no incident edges; vertex ids must be 0-based and dense")]
    SparseIds { vertex: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("random generation failed after {attempts} attempts")]
    RetryCapExceeded { attempts: usize },

    #[error("graph has minimum degree {found}, but the coefficients require at least {required}")]
    MinDegree { found: usize, required: usize },

    #[error("vertex {vertex} has no white vertex in its closed neighborhood")]
    NoProgress { vertex: usize },

    #[error("every vertex is already dominated")]
    FullyDominated,

    #[error("gain below s at {record}; s = {s}")]
    AuditFailure { record: Box<StepRecord>, s: String },

    #[error("audit failure: {0}")]
    AuditInvariant(String),

    #[error("graph has {n} vertices, above the exhaustive-search limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures that contradict a mathematical claim rather than an input problem.
    pub fn is_claim_failure(&self) -> bool {
        matches!(self, Error::AuditFailure { .. } | Error::AuditInvariant(_))
    }
}
