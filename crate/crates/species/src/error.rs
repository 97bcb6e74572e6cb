use thiserror::Error;

/// Errors surfaced by the series kernels and enumeration pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `exp` of a series whose constant coefficient is nonzero.
    #[error("exp requires zero constant term")]
    ExpNonzeroConstant,

    /// A coefficient that must be a nonnegative integer is not.
    #[error("non-integral count: coefficient of x^{index} is {value}")]
    NonIntegralCount { index: usize, value: String },

    /// Plethysm with an inner constant term into an outer series of
    /// unbounded support.
    #[error("ill-defined plethysm: inner series has nonzero constant term")]
    IllDefinedPlethysm,

    /// Compositional inversion of a series not of the form p1 + (degree >= 2).
    #[error("not invertible under plethysm")]
    NotInvertible,

    /// An operation on cycle-index series of more sorts than it supports.
    #[error("operation requires a one-sort series")]
    NotOneSort,

    /// Componentwise operation on gamma cycle indices over different groups.
    #[error("group mismatch between gamma cycle indices")]
    GroupMismatch,

    /// Lookup of a gamma component that does not exist.
    #[error("no component for key {0}")]
    MissingComponent(String),

    /// A partition argument outside the domain of a recursion.
    #[error("invalid partition argument: {0}")]
    InvalidPartition(String),

    /// A degree bound beyond what the guarded cross-check path accepts.
    #[error("degree bound {requested} exceeds limit {limit}")]
    BoundTooLarge { requested: usize, limit: usize },

    /// Brute-force enumeration requested beyond its hard size cap.
    #[error("oracle bound exceeded: n = {requested}, limit {limit}")]
    OracleBound { requested: usize, limit: usize },
}
