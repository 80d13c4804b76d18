use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The partition does not have the weight the formula requires.
    #[error("partition weight {found} ≠ {formula} = {expected}")]
    WeightMismatch {
        formula: &'static str,
        expected: u64,
        found: u64,
    },
    #[error("e0 = n - (number of parts) is negative: n = {n}, parts = {parts}")]
    NegativeZeroCount { n: u64, parts: u64 },
    /// A brute-force or expansion step would exceed its configured limit.
    #[error("{what}: size {size} exceeds the resource guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("invalid partition {input:?}: {reason}")]
    PartitionSyntax { input: String, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
