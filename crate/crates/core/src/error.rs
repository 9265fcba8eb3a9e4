use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong between reading a record and writing a report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("game {game}: unsupported board size {size} (only 19x19 is supported)")]
    UnsupportedBoardSize { game: String, size: String },

    #[error("invalid coordinate `{value}`{}", at_game(.game))]
    InvalidCoordinate { value: String, game: Option<String> },

    #[error("game {game}: unsupported record content: {what}")]
    Unsupported { game: String, what: String },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("game {game}, move {move_number}: {reason}")]
    Replay {
        game: String,
        move_number: usize,
        reason: String,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("pattern {0:?} is not in the class table")]
    CorruptState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty input: {0}")]
    Empty(String),

    #[error("networks have mismatched configurations: {0}")]
    ConfigMismatch(String),

    #[error(
        "power iteration did not converge after {iterations} iterations (last residual {residual:e}); \
         with alpha = 1 the graph may be periodic, use the dense `spectrum` solver instead"
    )]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

fn at_game(game: &Option<String>) -> String {
    match game {
        Some(g) => format!(" in game {g}"),
        None => String::new(),
    }
}

impl Error {
    /// Process exit code used by the command-line tool: 2 for data errors,
    /// 3 for numerical failures. Usage errors (1) are produced by the CLI
    /// itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::NonConvergence { .. } | Error::Numerical(_) => 3,
            Error::InvalidArgument(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
