use thiserror::Error;

use crate::axioms::AxiomVerdict;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    EmptyCarrier,

    #[error("dimension mismatch: expected order {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid structure name `{name}`: {msg}")]
    Name { name: String, msg: String },

    #[error("parameter out of range for {family}: {msg}")]
    Parameter { family: String, msg: String },

    #[error("operation is not associative; first failing triple {0:?}")]
    NotAssociative([usize; 3]),

    #[error("`~1` requires a monoid, but the table has no identity")]
    NotMonoid,

    #[error("pair fails the {mode} axioms")]
    Axioms {
        mode: &'static str,
        verdict: Box<AxiomVerdict>,
    },

    #[error("permutation set is not a group: {0}")]
    NotGroup(String),

    #[error("order {order} is not supported (limit {limit}){hint}")]
    UnsupportedOrder {
        order: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
