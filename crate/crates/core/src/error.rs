use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not invariant under s -> 1/s")]
    NotSymmetric,

    /// Back-substitution of a symmetric rewrite did not reproduce the input.
    #[error("symmetric rewrite failed its back-substitution check")]
    RewriteMismatch,

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("matrix determinant is not 1")]
    NotUnimodular,

    #[error("run reduction needs floor(p/q) >= 2, got p={p}, q={q}")]
    ReductionInapplicable { p: u64, q: u64 },

    #[error("invalid two-bridge fraction {p}/{q}: {reason}")]
    InvalidFraction {
        p: i64,
        q: i64,
        reason: &'static str,
    },

    #[error("invalid knot parameters: {0}")]
    InvalidKnot(String),

    #[error("malformed word: {0}")]
    InvalidWord(String),

    #[error("malformed run sequence: {0}")]
    InvalidRunSeq(String),

    #[error("relator matrix R = VA - BV has unexpected shape: {0}")]
    StructureViolation(&'static str),

    #[error("witness precondition could not be decided at the maximum precision")]
    PreconditionUnverifiable,

    #[error("witness precondition does not hold: {0}")]
    WitnessInapplicable(String),

    #[error("certificate polynomial hash {expected} does not match {actual}")]
    HashMismatch { expected: String, actual: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
