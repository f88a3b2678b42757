use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("computation error: {0}")]
    Compute(alexmod_core::Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<alexmod_core::Error> for CliError {
    fn from(e: alexmod_core::Error) -> Self {
        match e {
            alexmod_core::Error::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

impl CliError {
    /// 1 computation error, 2 parse error, 3 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) | CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}
