use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid cell `{cell}`: {message}")]
    Validation { cell: String, message: String },
    #[error("unknown {0}")]
    UnknownCell(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("vertices {0} and {1} are in different components")]
    Disconnected(String, String),
    #[error("margin {margin} exceeds the patch depth {depth}")]
    MarginTooLarge { margin: usize, depth: usize },
    #[error("invalid seed: {0}")]
    Seed(String),
    #[error("numbering rule is ambiguous at step {step}: {message}")]
    Ambiguous { step: usize, message: String },
    #[error("periods {0:?} too small for an embedded quotient")]
    PeriodTooSmall((usize, usize)),
    #[error("translated subcomplex leaves the patch at face `{0}`")]
    OutOfPatch(String),
    #[error("vertex set is not pattern-shaped: {0}")]
    NotPatternShaped(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
