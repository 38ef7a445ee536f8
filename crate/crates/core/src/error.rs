use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor is not a unit after removing its valuation: {0}")]
    DivisionByNonUnit(String),

    #[error("polylogarithm argument must have zero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient index {index} is beyond the series order {order}")]
    IndexBeyondOrder { index: usize, order: usize },

    #[error("method `{method}` requires k <= 0, got k = {k}")]
    MethodRequiresNonpositiveK { method: &'static str, k: i64 },

    #[error("determinant size {size} exceeds first column length {len}")]
    SizeExceedsColumn { size: usize, len: usize },

    #[error("index n = {n} exceeds the supported maximum {max}")]
    IndexOutOfRange { n: usize, max: usize },

    #[error("parameter k = {k} is outside the supported range |k| <= {max}")]
    ParameterOutOfRange { k: i64, max: i64 },

    #[error("level N = {level} exceeds the supported maximum {max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
