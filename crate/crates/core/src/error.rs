use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{n} vertices exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("{family}: parameter violates `{constraint}`")]
    InvalidParameter { family: String, constraint: String },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown family or combinator `{0}`")]
    UnknownFamily(String),

    #[error("`{name}` expects {expected}, got {got}")]
    Arity {
        name: String,
        expected: String,
        got: usize,
    },

    #[error("graph file line {line}: {msg}")]
    GraphFile { line: usize, msg: String },

    #[error("{what} exceeded the limit of {limit}")]
    Guard { what: &'static str, limit: usize },

    #[error("{0} is not a legal position of this game")]
    IllegalPosition(VertexSet),

    #[error("structure digraph contains a directed cycle")]
    Cycle,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
