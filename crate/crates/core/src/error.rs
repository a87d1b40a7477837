use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::emotion::ScoreKind;

/// Validation failure for a single score mapping. Every variant that can be
/// pinned to an input key carries it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScoreError {
    #[error("no scores given")]
    Empty,
    #[error("unknown key `{key}`: not an emotion or dyad name")]
    UnknownKey { key: String },
    #[error("duplicate key `{key}` (keys are case-insensitive)")]
    DuplicateKey { key: String },
    #[error("cannot mix kinds: `{first}` is {first_kind} but `{second}` is {second_kind}")]
    MixedKinds {
        first: String,
        first_kind: String,
        second: String,
        second_kind: String,
    },
    #[error("bad value for `{key}`: {reason}")]
    BadValue { key: String, reason: String },
    #[error("{kind} input needs {expected} keys but has {found}; missing: {}", missing.join(", "))]
    WrongArity {
        kind: ScoreKind,
        expected: usize,
        found: usize,
        missing: Vec<String>,
    },
    #[error("score for `{key}` is {value}, outside [0, 1]")]
    OutOfRange { key: String, value: f64 },
    #[error("intensity scores for `{key}` sum to {sum}, more than 1")]
    TripleOverflow { key: String, sum: f64 },
}

impl ScoreError {
    pub fn code(&self) -> i32 {
        match self {
            ScoreError::UnknownKey { .. } => 10,
            ScoreError::DuplicateKey { .. } => 11,
            ScoreError::MixedKinds { .. } => 12,
            ScoreError::BadValue { .. } => 13,
            ScoreError::WrongArity { .. } => 14,
            ScoreError::OutOfRange { .. } => 15,
            ScoreError::TripleOverflow { .. } => 16,
            ScoreError::Empty => 17,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{context}: invalid JSON at line {line}, column {column}: {message}")]
    Json {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {source}")]
    Score { context: String, source: ScoreError },
    #[error("{context}: record {index}: {source}")]
    Record {
        context: String,
        index: usize,
        source: ScoreError,
    },
    #[error("corpus has no records")]
    EmptyCorpus,
    #[error("record {index} is {found} but earlier records are {expected}")]
    HeterogeneousKinds {
        index: usize,
        expected: ScoreKind,
        found: ScoreKind,
    },
    #[error("record {index} has no group field `{field}`")]
    UnknownGroupField { index: usize, field: String },
    #[error("record {index}: group field `{field}` must be a non-empty string or number")]
    EmptyGroup { index: usize, field: String },
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error("invalid option combination: {0}")]
    InvalidOptionCombination(String),
    #[error("petal height/width ratio must be positive, got {0}")]
    NonPositiveRatio(f64),
    #[error("{wheels} wheels do not fit in a {rows}x{cols} grid")]
    GridOverflow {
        wheels: usize,
        rows: usize,
        cols: usize,
    },
    #[error("{titles} cell titles given for {wheels} wheels")]
    TitleMismatch { titles: usize, wheels: usize },
}

impl Error {
    /// Process exit code for this error. Every variant maps to its own code.
    pub fn code(&self) -> i32 {
        match self {
            Error::Io { .. } => 3,
            Error::Json { .. } => 4,
            Error::Score { source, .. } | Error::Record { source, .. } => source.code(),
            Error::EmptyCorpus => 20,
            Error::HeterogeneousKinds { .. } => 21,
            Error::UnknownGroupField { .. } => 22,
            Error::EmptyGroup { .. } => 23,
            Error::InvalidOption(_) => 30,
            Error::InvalidOptionCombination(_) => 31,
            Error::NonPositiveRatio(_) => 32,
            Error::GridOverflow { .. } => 40,
            Error::TitleMismatch { .. } => 41,
        }
    }
}

impl From<ScoreError> for Error {
    fn from(source: ScoreError) -> Self {
        Error::Score {
            context: "scores".into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
