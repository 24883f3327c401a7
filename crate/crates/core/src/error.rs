use thiserror::Error;

/// Errors raised by the algebra kernel and everything built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownIdentifier { name: String, pos: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },

    #[error("exponent overflow (cap is 2^31-1)")]
    ExponentOverflow,

    #[error("polynomial is not multihomogeneous: {0}")]
    NotHomogeneous(String),

    #[error("Groebner pair budget of {budget} exceeded ({pairs} pairs processed, basis size {basis_len})")]
    BudgetExceeded {
        budget: usize,
        pairs: usize,
        basis_len: usize,
    },

    #[error("exhaustive dimension search refused: {nvars} variables (guard is {guard})")]
    DimensionGuard { nvars: usize, guard: usize },

    #[error("graded piece has {count} monomials, above the enumeration guard {guard}")]
    EnumerationGuard { count: u128, guard: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("presentation matrix does not present the ideal: {0}")]
    PresentationMismatch(String),

    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),

    #[error("filter-regular sampling exhausted after {attempts} attempts in block {block}")]
    ResamplingExhausted { block: usize, attempts: usize },

    /// A computed identity that must hold for every valid input failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
