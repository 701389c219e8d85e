//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial must be monic")]
    NotMonic,

    #[error("polynomial must be squarefree")]
    NotSquarefree,

    #[error("constant polynomial has no spectrum")]
    ConstantPolynomial,

    #[error("polynomial vanishes at 0")]
    RootAtZero,

    #[error("interval endpoint is a root; divide it out first")]
    RootAtEndpoint,

    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,

    #[error("exterior power index {k} out of range for dimension {dim}")]
    ExteriorIndex { k: usize, dim: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("algebra is not nilpotent: lower central series stabilizes at dimension {0}")]
    NotNilpotent(usize),

    #[error("matrix is singular")]
    Singular,

    #[error("bracket not preserved on basis pair ({i}, {j})")]
    NotBracketPreserving { i: usize, j: usize },

    #[error("automorphism is not tame: R(phi^{0}) is infinite")]
    NotTame(u64),

    #[error("automorphism is not integer-like")]
    NotIntegerLike,

    #[error("dimension {dim} exceeds the scale cap {cap}")]
    ScaleCap { dim: usize, cap: usize },

    #[error("direct-sum tameness requires certifying that neither summand has an abelian factor")]
    AbelianFactorUncertified,

    #[error(
        "zeta series and closed form disagree at z^{index}: series {series}, closed form {closed}"
    )]
    ZetaMismatch {
        index: usize,
        series: String,
        closed: String,
    },

    #[error(
        "subgroup reduction counterexample: R = {full} on the group, {reduced} on the stable image"
    )]
    SubgroupReductionMismatch { full: usize, reduced: usize },

    #[error(
        "quotient reduction counterexample: R = {full} on the group, {reduced} on the quotient"
    )]
    QuotientReductionMismatch { full: usize, reduced: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
