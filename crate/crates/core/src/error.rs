use thiserror::Error;

use crate::complex::{HostFace, Triple};

/// Structural problems with a 3-graph or host.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face {0:?} repeats a vertex")]
    DegenerateFace([usize; 3]),
    #[error("vertex {vertex} out of range (vertex count {bound})")]
    VertexOutOfRange { vertex: usize, bound: usize },
    #[error("duplicate face {0:?}")]
    DuplicateFace(Triple),
    #[error("{class}-index {index} out of range (class size {bound})")]
    ClassIndexOutOfRange {
        class: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("duplicate host face {0:?}")]
    DuplicateHostFace(HostFace),
}

/// Failure to read one of the text formats.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: ComplexError,
    },
    #[error("unknown builtin target `{0}`")]
    UnknownBuiltin(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}
