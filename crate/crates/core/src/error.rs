use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} is outside the supported range")]
    UnsupportedOrder(usize),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("points coincide; they do not span a line")]
    CoincidentPoints,
    #[error("the two lines are identical")]
    SameLine,
    #[error("the null polarity is defined only for q not divisible by 3 (got q = {0})")]
    PolarityUndefined(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("no extra generator family is known for q = {0}")]
    NoExtraGenerators(usize),
    #[error("taxonomy violation for {kind} {index}: {detail}")]
    Taxonomy { kind: &'static str, index: usize, detail: String },
    #[error("subgroup census limited to groups of order <= {limit}, got {order}")]
    CensusTooLarge { order: usize, limit: usize },
    #[error("tactical constancy fails for {pair} cell ({row}, {col})")]
    Constancy { pair: &'static str, row: String, col: String },
    #[error("orbit labeling failed: {0}")]
    Labeling(String),
    #[error("cache error: {0}")]
    Cache(String),
}
