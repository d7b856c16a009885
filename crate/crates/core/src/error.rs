use std::fmt;

use thiserror::Error;

use crate::algebra::Violation;

/// Errors produced by the library.
///
/// Input problems (`Malformed`) are kept apart from semantic failures
/// (`Axioms`), and domain errors carry the offending elements so callers can
/// re-check them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("table violates {} axiom instance(s)", .0.len())]
    Axioms(Vec<Violation>),

    #[error("subset {0} is not a filter")]
    NotAFilter(String),

    #[error("filter is not monomial: the class of element {element} has no greatest element")]
    NotMonomial { element: usize },

    #[error("subset is not a closure retract: {{r in R : {element} <= r}} has no least element")]
    NotClosureRetract { element: usize },

    #[error("subset is not special: no p with p->{a} in S and p->{b} = {b}")]
    NotSpecial { a: usize, b: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size {n} exceeds the enumeration bound {bound} (estimated cost: {estimate})")]
    BoundExceeded {
        n: usize,
        bound: usize,
        estimate: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl fmt::Display) -> Self {
        Error::Invariant(msg.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
