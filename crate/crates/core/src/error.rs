use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size bound was exceeded; the caller should fall back to another path.
    #[error("{what} is {size}, over the cap of {cap}")]
    OverCap { what: &'static str, size: String, cap: u64 },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("empty degree")]
    EmptyDegree,

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("syntax error at line {line}, column {column}: expected {}", expected.join(" or "))]
    Syntax { line: usize, column: usize, expected: Vec<String> },

    #[error("line {line}, column {column}: {message}")]
    Semantic { line: usize, column: usize, message: String },

    #[error("corpus entry {entry}: {message}")]
    Validation { entry: String, message: String },

    #[error("unknown corpus group {0}")]
    UnknownGroup(String),

    #[error("none found: {0}")]
    NoneFound(String),

    #[error("no such character: {0}")]
    NoSuchCharacter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("class {0} is not regular semisimple")]
    ClassNotRegularSemisimple(usize),

    #[error("invalid primes: {0}")]
    InvalidPrimes(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn over_cap(what: &'static str, size: impl ToString, cap: u64) -> Self {
        Error::OverCap { what, size: size.to_string(), cap }
    }
}
