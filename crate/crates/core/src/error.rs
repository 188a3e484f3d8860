use thiserror::Error;

/// Broad classes of failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input itself is malformed or inconsistent.
    InvalidInput,
    /// The input is well formed but violates a mathematical precondition.
    Precondition,
    /// A proven statement failed to hold on a computed instance.
    TheoremViolation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid group shape: {0}")]
    InvalidShape(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cocharacter is not dominant: {0}")]
    NonDominant(String),
    #[error("all Frobenius scales are 1; 1 - w.sigma is not invertible")]
    DegenerateFrobenius,
    #[error("(n={n}, q={q}, m={m}) does not give a simple element")]
    NotSimple { n: usize, q: String, m: i64 },
    #[error("fixed point not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("fixed point of the Frobenius datum is not in the fundamental alcove")]
    NotInAlcove,
    #[error("dimension formula unavailable: mu is not minuscule")]
    NotMinuscule,
    #[error("lambda {0} does not index a nonempty stratum")]
    NotInStrata(String),
    #[error("cocharacter is not central: {0}")]
    NotCentral(String),
    #[error("mu is not of the form (m_j * omega_1) with 0 <= m_j <= d: {0}")]
    NotOmegaShape(String),
    #[error("not a coroot of this shape: {0}")]
    NotCoroot(String),
    #[error("operation requires a single GL_3 block: {0}")]
    NotGl3(String),
    #[error("candidate enumeration too large: {count} candidates exceeds the limit {limit}")]
    EnumerationTooLarge { count: String, limit: u64 },
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("search box too small: {0}")]
    BoxTooSmall(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ShapeMismatch(_)
            | Error::InvalidShape(_)
            | Error::InvalidPermutation(_)
            | Error::NonDominant(_)
            | Error::NotCoroot(_) => ErrorClass::InvalidInput,
            Error::TheoremViolation(_) => ErrorClass::TheoremViolation,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
