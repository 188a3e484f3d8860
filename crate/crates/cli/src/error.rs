use kisin_core::ErrorClass;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kisin_core::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("golden mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Config(_) | CliError::Json(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e.class() {
                ErrorClass::InvalidInput => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::TheoremViolation => 4,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
