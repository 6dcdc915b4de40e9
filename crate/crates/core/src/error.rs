use thiserror::Error;

use crate::graph::VertexLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexLabel),
    #[error("loop forbidden at {0}")]
    LoopForbidden(VertexLabel),
    #[error("invalid class size: {0:?}")]
    InvalidClassSize(String),
    #[error("empty cluster")]
    EmptyCluster,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("incomplete colouring: {0} has no colour")]
    IncompleteColouring(VertexLabel),
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("not a proper colouring: edge {0}-{1} joins equal colours")]
    NotProper(VertexLabel, VertexLabel),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("{0} requires ℓ ≥ 2")]
    TooFewClasses(&'static str),
    #[error("not a single-class cluster")]
    NotSingleClass,
    #[error("not a {0} tree: {1}")]
    NotEmbodimentTree(&'static str, String),
    #[error("odd cycle requires n ≥ 5 (t ≥ 2), got t = {0}")]
    OddCycleTooShort(u32),
    #[error("path-type construction failed: no colour differs from {last} with {remaining} vertices left")]
    PathTypeFailed { last: u32, remaining: u32 },
    #[error("factorial search refused: ℓ = {classes} exceeds limit {limit}")]
    FactorialRefused { classes: usize, limit: usize },
    #[error("unknown {what}: {value}")]
    UnknownName { what: &'static str, value: String },
    #[error("bad parameters for {id}: {reason}")]
    BadParameters { id: String, reason: String },
    #[error("sequence value too large for a class size at ℓ = {0}")]
    SequenceOverflow(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
