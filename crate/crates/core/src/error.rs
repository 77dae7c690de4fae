//! Error type shared by all evaluation kernels.
//!
//! Evaluators fail loudly: a pole is an error, never an infinity, so that
//! partition sums cannot silently absorb a singular term.

use thiserror::Error;

/// Errors produced by exact evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division of a field element by zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A rational function (or one of the elementary weights) was evaluated
    /// at a zero of its denominator.
    #[error("pole at evaluation point: {0}")]
    PoleAtPoint(String),

    /// Numerator and denominator vanish simultaneously. Cannot occur for
    /// canonical-form rational functions; reserved for defensive paths.
    #[error("indeterminate value at evaluation point: {0}")]
    IndeterminateAtPoint(String),

    /// Residue extraction hit a pole of order two or higher.
    #[error("higher-order pole at {0}")]
    HigherOrderPole(String),

    /// A cardinality profile asks for more elements than a set holds.
    #[error("infeasible partition profile: {0}")]
    InfeasibleProfile(String),

    /// A partition fed to a weight function does not match its profile.
    #[error("infeasible partition: {0}")]
    InfeasiblePartition(String),

    /// An index (color or monodromy index) is outside its admissible range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Two collections disagree on a per-color cardinality where equality
    /// is required.
    #[error("cardinality mismatch: {0}")]
    CardinalityMismatch(String),

    /// The gl_n reduction requires the color-0 sets to be empty.
    #[error("color-0 sets must be empty, got cardinality {0}")]
    NonEmptyColorZero(usize),

    /// A model functional was queried at a point it does not cover.
    #[error("missing alpha value for color {color} at point {point}")]
    MissingAlphaValue { color: usize, point: String },

    /// The requested chain exceeds the configured dimension cap.
    #[error("chain dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    /// No (or more than one) basis vector satisfies the vacuum conditions.
    #[error("vacuum detection failed: {0}")]
    NoVacuumFound(String),

    /// A matrix expected to be a scalar multiple of the identity is not.
    #[error("matrix is not scalar: {0}")]
    NotScalar(String),

    /// Bethe parameters fed to an on-shell check do not solve the Bethe
    /// equations of the chain.
    #[error("parameters are not on shell: {0}")]
    NotOnShell(String),

    /// An intermediate univariate limit in the norm computation hit a
    /// genuine pole.
    #[error("limit path failure: {0}")]
    LimitPathFailure(String),

    /// Malformed textual input (rational literals, collections, models).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
