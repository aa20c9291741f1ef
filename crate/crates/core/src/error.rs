use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("matching pairs share vertex {0}")]
    MatchingOverlap(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("order {order} exceeds supported bound {cap} for {what}")]
    OverCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} has degree {degree} < 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("vertex sets A and B overlap at {0}")]
    Overlap(usize),
    #[error("pair (A, B) is not a barrier: deficiency {0}")]
    NotABarrier(i64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction identity violated: {0}")]
    IdentityViolated(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
