use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base p must be at least 2, got {0}")]
    InvalidBase(u64),

    #[error("block exponent N must be at least 1, got {0}")]
    InvalidExponent(u32),

    #[error("enumeration needs {required} terms but the budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("ring elements live over different bases: p={left} and p={right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("index {index} is out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("coefficients must sum to zero, but they sum to {sum}")]
    NotZeroSum { sum: String },

    #[error("polynomial division leaves a nonzero remainder [{}]", .remainder.join(", "))]
    NotDivisible { remainder: Vec<String> },

    #[error("divisor must have a leading or trailing coefficient of +1 or -1")]
    NonUnitDivisor,

    #[error("vanishing order of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("weight mu_{index} must be a positive integer, got {value}")]
    NonPositiveWeight { index: usize, value: i64 },

    #[error("weight vector must not be empty")]
    EmptyWeights,

    #[error("partition classes are invalid: {0}")]
    InvalidPartition(String),
}
