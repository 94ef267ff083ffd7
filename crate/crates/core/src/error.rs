use std::fmt;

use thiserror::Error;

/// Location-aware parse failure. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Re-anchors an error produced on a single line of a larger file.
    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GfError {
    #[error("constant term is not an invertible rational")]
    NonInvertibleConstant,
    #[error("square root requires constant term 1")]
    SqrtConstant,
    #[error("composition requires an inner series with zero constant term")]
    ComposeConstant,
    #[error("not a power series at 0")]
    NotPowerSeries,
    #[error("insufficient truncation order: {0}")]
    InsufficientOrder(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("multiple dominant poles")]
    MultipleDominantPoles,
    #[error("unresolved root cluster: {0}")]
    Unresolved(String),
    #[error("negative coefficient at index {0}")]
    NegativeCoefficient(usize),
    #[error("improper system: {0}")]
    Improper(String),
    #[error("polynomial is not squarefree in the solved variable")]
    NotSquarefree,
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("non-contracting catalytic equation: {0}")]
    NonContracting(String),
    #[error("divided difference left a nonzero remainder")]
    DividedDifferenceRemainder,
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("no admissible candidate: {0}")]
    NoCandidate(String),
    #[error("parse error at {0}")]
    Parse(ParseError),
}

impl From<ParseError> for GfError {
    fn from(e: ParseError) -> Self {
        GfError::Parse(e)
    }
}

pub type Result<T> = std::result::Result<T, GfError>;
