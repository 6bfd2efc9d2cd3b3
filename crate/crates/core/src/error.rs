use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown type label `{0}`")]
    UnknownType(String),
    #[error("malformed type expression `{0}`")]
    MalformedLabel(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("coweight is not dominant: {0}")]
    NotDominant(String),
    #[error("{0} requires a crystallographic (Weyl) type")]
    NotCrystallographic(String),
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: u64,
        budget: u64,
    },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("hypothesis `{flag}` not satisfied: {detail}")]
    Hypothesis { flag: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no witness table entry for {0}")]
    NoTableEntry(String),
    #[error("witness check failed for {label}: {detail}")]
    WitnessFailure { label: String, detail: String },
    #[error("theorem check mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn hypothesis(flag: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            flag: flag.into(),
            detail: detail.into(),
        }
    }

    pub fn budget(what: impl Into<String>, needed: u64, budget: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed,
            budget,
        }
    }
}
