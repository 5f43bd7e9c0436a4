use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: &'static str, witness: Vec<usize> },

    #[error("positivity test needs irreducible representation matrices for a non-class function on a non-abelian group")]
    NeedsIrreps,

    #[error("corrupt character table: {relation} violated for {pair:?} (deviation {deviation:e})")]
    CorruptTable {
        relation: &'static str,
        pair: (usize, usize),
        deviation: f64,
    },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("connection set is not closed under conjugation; the character LP does not apply (export formulation A or C instead)")]
    WrongFormulation,

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("action is not transitive: {} orbits", orbits.len())]
    NotTransitive { orbits: Vec<Vec<usize>> },

    #[error("element {element} does not preserve edge {{{}, {}}}", edge.0, edge.1)]
    NotAutomorphism { element: usize, edge: (usize, usize) },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot access {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub(crate) fn write_file(path: &std::path::Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}
