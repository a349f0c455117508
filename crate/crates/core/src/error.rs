use thiserror::Error;

/// Failure to parse or validate a partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid part `{0}`")]
    InvalidPart(String),
    #[error("part `{0}` has no color suffix (expected `r` or `g`)")]
    MissingColor(String),
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts are not weakly decreasing at position {0}")]
    NotDecreasing(usize),
}

/// Failure of a single construction step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("empty input")]
    EmptyInput,
    #[error("not in image: {0}")]
    NotInImage(String),
    #[error("malformed: {0}")]
    Malformed(String),
}

/// Failure of a series operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("constant term is not a unit")]
    NonUnitConstant,
}

/// Rejected refined query.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("refined query requires r, l, p, q >= 1 (got r={r}, l={l}, p={p}, q={q})")]
pub struct QueryError {
    pub r: usize,
    pub l: usize,
    pub p: u64,
    pub q: u64,
}
