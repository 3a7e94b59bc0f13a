use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("atom {0} is not in the Herbrand base")]
    OutOfBase(String),

    #[error("inconsistent interpretation: {0} is both true and false")]
    Inconsistent(String),

    #[error("program is not definite: clause `{0}` has a negative body literal")]
    NotDefinite(String),

    #[error("enumeration cap exceeded: {what} needs {needed} atoms, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },

    #[error("level mapping domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("fixpoint iteration did not converge within {cap} steps (operator not monotone in the stated direction?)")]
    NoConvergence { cap: usize },

    #[error("iteration left the monotone chain at stage {stage}")]
    NonMonotone { stage: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed interpretation JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
