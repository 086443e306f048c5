use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a correlation could not be computed for a pair of vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Undefined {
    TooFewObservations(usize),
    LengthMismatch { membership: usize, ranks: usize },
    ConstantMembership,
    ZeroVariance,
}

impl std::fmt::Display for Undefined {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Undefined::TooFewObservations(n) => write!(f, "need at least 3 observations, got {n}"),
            Undefined::LengthMismatch { membership, ranks } => {
                write!(f, "membership has {membership} values but ranks has {ranks}")
            }
            Undefined::ConstantMembership => f.write_str("membership is constant"),
            Undefined::ZeroVariance => f.write_str("ranks have zero variance"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("{}: invalid UTF-8 at byte offset {offset}", path.display())]
    InvalidUtf8 { path: PathBuf, offset: usize },

    #[error("{}:{line}: {message}", path.display())]
    Malformed { path: PathBuf, line: usize, message: String },

    #[error("{}:{line}: {key:?} already maps to {existing:?}, refusing {conflicting:?}", path.display())]
    Conflict { path: PathBuf, line: usize, key: String, existing: String, conflicting: String },

    #[error("corpus directory {} does not exist", .0.display())]
    MissingDirectory(PathBuf),

    #[error("no .{extension} documents under {}", path.display())]
    EmptyCorpus { path: PathBuf, extension: String },

    #[error("{}: list has no entries", .0.display())]
    EmptyList(PathBuf),

    #[error("cannot lemmatize an empty word")]
    EmptyWord,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(Undefined),

    #[error("no aggregate count for lemma {0:?}")]
    MissingCount(String),

    #[error("config: {0}")]
    Config(String),

    #[error("computation failed: {0}")]
    Computation(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn malformed(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Malformed { path: path.into(), line, message: message.into() }
    }

    /// Process exit code for the command line tool: 1 for bad input, 2 when
    /// the inputs were fine but the computation could not produce a result.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UndefinedCorrelation(_) | Error::MissingCount(_) | Error::Computation(_) => 2,
            _ => 1,
        }
    }
}
