use thiserror::Error;

/// Errors produced by the library. Each variant names the offending token
/// so the CLI can print a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),

    #[error("reflexive commuting pair [{0}, {0}]")]
    ReflexivePair(String),

    #[error("duplicate commuting pair [{0}, {1}]")]
    DuplicatePair(String, String),

    #[error("alphabet has {0} letters, at most {max} are supported", max = crate::trace::MAX_LETTERS)]
    TooManyLetters(usize),

    #[error("operands belong to different presentations")]
    PresentationMismatch,

    #[error("expected an element of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} is outside the complex (max degree {max})")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("letters `{0}` and `{1}` commute, so they cannot split the monoid")]
    AdjacentSplit(String, String),

    #[error("coset pair is not in the kernel of p (p = {0})")]
    NotInKernel(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed presentation file: {0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
