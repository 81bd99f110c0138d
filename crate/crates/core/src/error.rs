use thiserror::Error;

/// Errors shared across the crate. Variants mirror the failure modes of the
/// public operations; query-style errors (`NoSuchNode`, `OutOfRange`) are
/// recoverable, the rest indicate bad input or a broken invariant.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unbalanced parentheses at position {0}")]
    UnbalancedInput(usize),
    #[error("input encodes a forest, not a single tree")]
    MultipleRoots,
    #[error("no such node")]
    NoSuchNode,
    #[error("infeasible generator profile: {0}")]
    InfeasibleProfile(String),
    #[error("pack: child {index} has associated subtree size {size} >= L")]
    OversizedChild { index: usize, size: u32 },
    #[error("tree too small to decompose")]
    TreeTooSmall,
    #[error("degree {0} not in the model alphabet (n_i = 0) for a non-root node")]
    DegreeOutsideSigma(u32),
    #[error("outside the exhaustive budget: {0}")]
    TooLarge(String),
    #[error("no decomposition parameter fits {0} pieces into B slots")]
    CannotFit(usize),
    #[error("shape mismatch between g code and parts: {0}")]
    ShapeMismatch(String),
    #[error("corrupt payload: {0}")]
    CorruptPayload(String),
    #[error("depth exceeds weighted depth of the node")]
    DepthOutOfRange,
    #[error("index out of range")]
    OutOfRange,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad container format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
