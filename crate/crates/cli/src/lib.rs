//! Library side of `opinion-calc`: the opinion file format, the expression
//! language, evaluation and output formatting.

pub mod eval;
pub mod expr;
pub mod file;
pub mod output;

use std::io::{self, Read};
use std::path::Path;

use thiserror::Error;

pub use eval::{evaluate, EvalError, EvalOptions, Evaluation};
pub use expr::{parse_expression, BinaryOp, Expression, Node, ParseError, Span};
pub use file::{FileError, OpinionFile};

/// Stable process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INVALID: u8 = 2;
    pub const NOT_DECOMPOSABLE: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: FileError,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("in `{text}`: {source}")]
    Eval {
        text: String,
        #[source]
        source: EvalError,
    },
    #[error("unknown opinion `{0}`")]
    UnknownOpinion(String),
    #[error(transparent)]
    Opinion(#[from] opinion_algebra::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Eval {
                source:
                    EvalError::Operator {
                        source: opinion_algebra::Error::NotDecomposable(_),
                        ..
                    },
                ..
            }
            | CliError::Opinion(opinion_algebra::Error::NotDecomposable(_)) => exit::NOT_DECOMPOSABLE,
            _ => exit::INVALID,
        }
    }
}

/// Reads and parses an opinion file; `-` reads standard input.
pub fn load_file(path: &str) -> Result<OpinionFile, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(io_err)?
    };
    OpinionFile::parse(&text).map_err(|source| CliError::File {
        path: path.to_owned(),
        source,
    })
}

/// Parses and evaluates `src` against `file`, attaching the failing
/// subexpression text to evaluation errors.
pub fn evaluate_source(src: &str, file: &OpinionFile, options: &EvalOptions) -> Result<Evaluation, CliError> {
    let expr = parse_expression(src)?;
    evaluate(&expr, file, options).map_err(|source| CliError::Eval {
        text: source.span().slice(src).to_owned(),
        source,
    })
}
