use thiserror::Error;

use crate::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u64 },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u64, v: u64 },

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("requires girth at least {required}, graph has girth {found}")]
    GirthPrecondition { required: usize, found: usize },

    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("invariant violated during {stage}{}: {detail}", vertex_suffix(.vertex))]
    InvariantViolation {
        stage: &'static str,
        vertex: Option<Vertex>,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn vertex_suffix(vertex: &Option<Vertex>) -> String {
    match vertex {
        Some(v) => format!(" at vertex {v}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn invariant(stage: &'static str, vertex: Option<Vertex>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            stage,
            vertex,
            detail: detail.into(),
        }
    }

    /// True for errors caused by malformed input files.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::SelfLoop { .. } | Error::DuplicateEdge { .. } | Error::Io(_)
        )
    }
}
