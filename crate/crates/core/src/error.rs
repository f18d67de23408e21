use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("query (i={i}, len={len}) outside text of length {n}")]
    OutOfRange { i: usize, len: usize, n: usize },
}

/// A structurally invalid encoding. `phrase` is the 1-based phrase index.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("phrase {phrase}: {reason}")]
    Malformed { phrase: usize, reason: String },
    #[error("phrase {phrase}: {kind} phrase not allowed in a {variant} encoding")]
    MixedKinds {
        phrase: usize,
        kind: &'static str,
        variant: &'static str,
    },
    #[error("phrase lengths sum to {actual}, header declares n={declared}")]
    LengthMismatch { declared: usize, actual: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unsupported format version {0:?}")]
    Version(String),
    #[error("stream truncated: header declares {declared} phrases, found {found}")]
    Truncated { declared: usize, found: usize },
    #[error(transparent)]
    Encoding(#[from] EncodingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AccessError {
    #[error("position {i} outside [1, {n}]")]
    Position { i: usize, n: usize },
    #[error("range [{i}, {i}+{len}) outside [1, {n}]")]
    Range { i: usize, len: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("k={k} exceeds the budget of {max}")]
    OverBudget { k: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exhaustive search limited to n <= {max}, got n = {n}")]
pub struct BudgetError {
    pub n: usize,
    pub max: usize,
}
