use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("binomial with negative upper argument {0}")]
    NegativeBinomial(i64),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Pfaffian needs even order, got {0}")]
    OddOrder(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("matching expansion limited to order {limit}, got {order}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("exact division failed: {0}")]
    Inexact(String),
    #[error("invalid region spec: {0}")]
    InvalidSpec(String),
    #[error("hole or rhombus does not fit: {0}")]
    Placement(String),
    #[error("region lacks the {0} symmetry")]
    NotSymmetric(&'static str),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("profile width {width} exceeds cap {cap}")]
    WidthExceeded { width: usize, cap: usize },
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("lemma hypotheses violated: {}", .0.join("; "))]
    Hypotheses(Vec<String>),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
