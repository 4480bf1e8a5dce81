use std::fmt;

/// Failure to read an element in cycle-chain notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("images do not define an injective partial map")]
    NotInjective,

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("element set is not closed under composition: {0}")]
    NotClosed(String),

    #[error("subset is not contained in the semigroup: {0}")]
    NotASubset(String),

    #[error("semigroup of size {size} exceeds the limit {limit} for {operation}")]
    TooLarge {
        operation: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("not semitransitive: points {0} and {1} are incomparable")]
    NotSemitransitive(usize, usize),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("not 0-simple Brandt form: {0}")]
    NotBrandt(String),

    #[error("hypothesis violated: {0}")]
    Precondition(String),

    #[error("structure check failed: {0}")]
    Structure(String),

    #[error("group oracle degree {degree} exceeds cap {cap}; raise it with --cap or ISG_GROUP_ORACLE_CAP")]
    DegreeOverCap { degree: usize, cap: usize },

    #[error(
        "search budget of {budget} nodes exhausted after {found} matching semigroups (incomplete)"
    )]
    BudgetExhausted { budget: u64, found: usize },

    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
