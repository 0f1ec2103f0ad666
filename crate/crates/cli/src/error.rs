use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] moduli_lab::Error),

    #[error("usage: {0}")]
    Usage(String),

    #[error("golden file: {0}")]
    Golden(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("{0} acceptance criteria failed")]
    AcceptanceFailed(usize),
}

impl CliError {
    /// 0 success, 1 capacity/domain/usage, 2 acceptance failure, 3 internal
    /// consistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_consistency() => 3,
            CliError::AcceptanceFailed(_) => 2,
            _ => 1,
        }
    }
}
