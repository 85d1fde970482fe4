use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}`: differential has degree {found:?}, expected {expected}")]
    DifferentialDegree {
        name: String,
        expected: i64,
        found: Option<i64>,
    },
    #[error("morphism image of `{name}` has degree {found:?}, expected {expected}")]
    ImageDegree {
        name: String,
        expected: i64,
        found: Option<i64>,
    },
    #[error("generator `{0}` has non-positive degree; the algebra must be positively graded")]
    NonPositiveDegree(String),
    #[error("cannot eliminate ({x}, {y}): {reason}")]
    Elimination { x: String, y: String, reason: String },
    #[error("window [{lo}, {hi}] exceeds the width cap {cap}")]
    WindowCap { lo: i64, hi: i64, cap: i64 },
    #[error("degree {degree} has {size} basis monomials, above the limit {limit}")]
    BasisTooLarge { degree: i64, size: usize, limit: usize },
    #[error("inconsistent augmentation: {0}")]
    Augmentation(String),
    #[error("d^2 != 0 under sign convention {convention}: {detail}")]
    SignConventionFault { convention: String, detail: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("malformed model JSON: {0}")]
    Json(String),
    #[error("window truncation: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
