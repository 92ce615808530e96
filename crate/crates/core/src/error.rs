use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator row is empty")]
    EmptyRow,

    #[error("generator row must start with 0 (zero self-coupling), got {0}")]
    NonZeroDiagonal(i64),

    #[error("weight {value} at position {position} exceeds the magnitude bound {bound}")]
    WeightOutOfRange { position: usize, value: i64, bound: i64 },

    #[error("size mismatch: expected {expected} neurons, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("states have mixed sizes ({first} and {other})")]
    MixedSizes { first: usize, other: usize },

    #[error("update order is not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },

    #[error("state size {n} is outside 1..={max}")]
    StateSize { n: usize, max: usize },

    #[error("invalid state string {0:?}: expected only '+' and '-'")]
    InvalidStateString(String),

    #[error("n = {n} exceeds the {method} enumeration cap of {cap}")]
    SizeTooLarge { n: usize, cap: usize, method: &'static str },

    #[error("max_iters must be at least 1")]
    ZeroIterations,

    #[error("partitions must be at least 1")]
    ZeroPartitions,

    #[error("incremental field diverged from a fresh evaluation at state {state:#x}")]
    FieldCheckpointMismatch { state: u64 },

    #[error("fixed-point set is not closed under rotation (state {state:#x})")]
    RotationClosureViolated { state: u64 },

    #[error("invalid search configuration: {0}")]
    InvalidSearchConfig(String),

    #[error("no trial reached row sum {target} within {budget} draws")]
    RowSumUnsatisfiable { target: i64, budget: u32 },
}
