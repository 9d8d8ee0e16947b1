use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// What went wrong on a particular line of a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("malformed statement: {0}")]
    Malformed(String),
    #[error("edge weight must be positive, got `{0}`")]
    NonPositiveWeight(String),
    #[error("vertex weight must be nonnegative, got `{0}`")]
    NegativeVertexWeight(String),
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 when the error is not tied to a line.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph file: {0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("literal: {0}")]
    Literal(String),
    #[error("invalid word: {0}")]
    Validation(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("`{word}` is not an element of the {universe} universe")]
    OutsideUniverse { word: String, universe: String },
    #[error("the {0} universe is infinite; its total measure is unbounded")]
    Unbounded(String),
    #[error("enumeration exceeded {limit} words; lower --max-len")]
    EnumerationLimit { limit: usize },
    #[error("operands live in different measure spaces")]
    SpaceMismatch,
    #[error("{0}")]
    Internal(String),
}

impl Error {
    /// Input that could not be read at all, as opposed to well-formed input
    /// that violates a mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Io { .. } | Error::Literal(_) | Error::Validation(_)
        )
    }
}
