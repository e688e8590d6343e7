use thiserror::Error;

/// Exit code 2: the input could not be used. Exit code 1: a computed
/// invariant did not hold.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("invariant failure: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 1,
        }
    }
}

impl From<spectre::Error> for CliError {
    fn from(e: spectre::Error) -> Self {
        use spectre::Error::*;
        match e {
            InternalCancellationFailure(_) | NonIntegerResult(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
