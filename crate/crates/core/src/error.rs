use thiserror::Error;

/// Everything that can go wrong when building diagrams, contexts or elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin type {series}{rank}: {constraint}")]
    InvalidType {
        series: char,
        rank: usize,
        constraint: String,
    },
    #[error("operation requires a finite-type diagram or node set: {0}")]
    NotFiniteType(String),
    #[error("node set {0:?} is not connected")]
    Disconnected(Vec<usize>),
    #[error("node {node} is not a node of the diagram (valid labels: {valid:?})")]
    InvalidNode { node: usize, valid: Vec<usize> },
    #[error("simple root {node} is not cominuscule: its coefficient in delta is {coefficient}")]
    NotCominuscule { node: usize, coefficient: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
