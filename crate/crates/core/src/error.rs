use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown letter token `{0}` (expected 1, 2, -2 or -1)")]
    BadToken(String),
    #[error("bottom row has {bottom} cells but top row only {top}")]
    BottomLongerThanTop { top: usize, bottom: usize },
    #[error("a tableau has at most two rows")]
    TooManyRows,
    #[error("shape `{0}` is not of the form L1,L2")]
    BadShape(String),
    #[error("({lambda1},{lambda2}) is not a partition: need lambda1 >= lambda2")]
    NotAPartition { lambda1: usize, lambda2: usize },
    #[error("unknown operator `{0}` (expected e1, e2, f1 or f2)")]
    BadOperator(String),
    #[error("color must be 1 or 2, got {0}")]
    BadColor(u64),
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge references vertex {0}, which does not exist")]
    DanglingId(usize),
    #[error("source id {0} does not exist")]
    DanglingSource(usize),
    #[error("vertex ids must be 0..n in order; found id {found} at position {position}")]
    NonDenseIds { position: usize, found: usize },
    #[error("vertex {vertex} has more than one {direction} edge of color {color}")]
    DuplicateEdge {
        vertex: usize,
        color: u8,
        direction: &'static str,
    },
    #[error("vertex {id}: {source}")]
    BadTableau { id: usize, source: ParseError },
}
