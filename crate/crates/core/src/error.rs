use std::path::PathBuf;

use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {0:?}: expected \"p\" or \"p/q\"")]
pub struct ParseRatError(pub String);

#[derive(Debug, Error)]
pub enum WallError {
    #[error("invalid twist {0:?}: expected \"0\" or \"1/k\" with k >= 1")]
    InvalidTwist(String),

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: Rat },

    #[error("{what} must be nonzero")]
    Zero { what: &'static str },

    #[error("invalid target class: {0}")]
    InvalidTarget(String),

    #[error("search space has {cells} cells, over the budget of {budget}")]
    BudgetExceeded { cells: u128, budget: u128 },

    #[error("{0}")]
    Unsupported(String),
    #[error("workers must be at least 1")]
    NoWorkers,

    #[error("rank or scaled coordinate out of i64 range")]
    Overflow,

    #[error("fixture {path}: {message}")]
    Fixture { path: PathBuf, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = WallError> = std::result::Result<T, E>;
