use crate::partition::{Cell, Partition};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing")]
    MalformedPartition,

    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),

    #[error("cell ({0}, {1}) is not in the diagram", .0.row, .0.col)]
    CellNotInDiagram(Cell),

    #[error("requested size {requested} exceeds the configured cap {cap}")]
    LimitExceeded { requested: usize, cap: usize },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("core has a hook length divisible by {0}")]
    NotAPCore(usize),

    #[error("quotient must have exactly {expected} components, got {got}")]
    QuotientArity { expected: usize, got: usize },

    #[error("found {count} rim hooks of length {length}; caller violated the uniqueness hypothesis")]
    MultipleHooks { length: usize, count: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("partition {0} is not odd")]
    NotOdd(Partition),

    // Sentinel for statements the underlying theorems guarantee; must never fire.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("the 2-adic valuation of 0 is undefined")]
    ZeroValuation,

    #[error("binomial requires m <= n, got n={n}, m={m}")]
    BinomialDomain { n: u64, m: u64 },

    #[error("rank {rank} is out of range (max {max})")]
    RankOutOfRange { rank: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
