use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] wqbg_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache {kind} error: {detail}")]
    Cache { kind: &'static str, detail: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for input errors, 3 for failed hypotheses, 4 for exhausted budgets.
    pub fn exit_code(&self) -> i32 {
        use wqbg_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::UnknownType(_)
                | E::MalformedLabel(_)
                | E::Parse(_)
                | E::BasisMismatch(_)
                | E::NotDominant(_)
                | E::InvalidAutomorphism(_)
                | E::NotCrystallographic(_) => 2,
                E::Hypothesis { .. } => 3,
                E::BudgetExceeded { .. } => 4,
                _ => 1,
            },
            CliError::Io(_) | CliError::Cache { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
