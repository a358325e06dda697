use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: n = {n} exceeds the supported bound {max}")]
    Capacity {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("{what}: value {value} outside {expected}")]
    Range {
        what: &'static str,
        value: usize,
        expected: &'static str,
    },

    #[error("set {set} is not contained in a ground set of size {n}")]
    OutOfRange { set: ElementSet, n: usize },

    #[error("invalid CI-statement: {0}")]
    InvalidStatement(String),

    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("element {} is a loop", element + 1)]
    Loop { element: usize },

    #[error("structure violates axiom {axiom}: {witness}")]
    Axiom {
        axiom: &'static str,
        witness: String,
    },

    #[error("not a matroid rank function: {0}")]
    NotMatroid(String),

    #[error("set function is not submodular: {0}")]
    NotSubmodular(String),

    #[error("invalid chirotope: {0}")]
    Chirotope(String),

    #[error("matrix is not symmetric at ({}, {})", row + 1, col + 1)]
    NotSymmetric { row: usize, col: usize },

    #[error(
        "matrix is not positive definite: leading principal minor of order {order} is {value}"
    )]
    NotPositiveDefinite { order: usize, value: String },

    #[error("vector configuration has rank zero")]
    ZeroRank,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An invariant that holds for valid input failed at runtime. Reaching
    /// this means either the input bypassed validation or there is a bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
