use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Grassmannian G({k},{n}): need n > k >= 1")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("invalid partition {parts:?} for a {k}x{w} box")]
    InvalidPartition { parts: Vec<usize>, k: usize, w: usize },

    #[error("sigma_{size} is not a special class in this box (width {width})")]
    NotSpecial { size: usize, width: usize },

    #[error("classes live on different Grassmannians: G({0},{1}) vs G({2},{3})", .left.0, .left.1, .right.0, .right.1)]
    ContextMismatch { left: (usize, usize), right: (usize, usize) },

    #[error("codimension mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cell not contained in variety: mu = {mu} is not >= lambda = {lambda}")]
    CellNotContained { lambda: String, mu: String },

    #[error("grading mismatch: {0}")]
    GradingMismatch(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("outside dual-cone region: {0}")]
    OutsideDualCone(String),

    #[error("exceptional multiplicities exceed Schubert degree by {deficit}")]
    Deficit { deficit: i64 },

    #[error("inequality violated: {0}")]
    InequalityViolated(String),

    #[error("invalid incidence profile: {0}")]
    InvalidIncidence(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("malformed input: {0}")]
    Input(String),
}
