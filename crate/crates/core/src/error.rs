use thiserror::Error;

/// Everything that can go wrong between reading an arrangement and
/// reporting its threshold.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("hyperplane {index} has a zero normal vector")]
    InvalidHyperplane { index: usize },

    #[error("hyperplane {index} has negative multiplicity {value}")]
    InvalidMultiplicity { index: usize, value: i64 },

    #[error("arrangement is empty: no hyperplane with positive multiplicity")]
    EmptyArrangement,

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("non-linear factor at position {pos}: {message}")]
    Nonlinear { pos: usize, message: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("arrangement is not central; localize it first")]
    NotCentral,

    #[error("invalid rational `{0}`")]
    Rational(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("input too large for {what}: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid input document: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
