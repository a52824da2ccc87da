use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A value failed validation. `field` is a dotted path into the input.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("position is within the degeneracy radius of the {anchor}")]
    DegeneratePosition { anchor: &'static str },

    #[error("position ({x}, {y}, {z}) lies outside the decision bounds")]
    OutOfBounds { x: f64, y: f64, z: f64 },

    #[error("candidates have {left} and {right} objectives")]
    IncompatibleCandidates { left: usize, right: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("index {index} out of range for front of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("no feasible point found: {0}")]
    Infeasible(String),

    #[error("candidate {candidate_id} is not part of round {current_round}")]
    StaleSelection {
        candidate_id: String,
        current_round: usize,
    },

    #[error("no adaptation round has been run yet")]
    NoOpenRound,

    #[error("session {0} not found")]
    SessionNotFound(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad caller input rather than runtime failures.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Validation { .. } | Error::Json(_) | Error::OutOfBounds { .. }
        )
    }
}
