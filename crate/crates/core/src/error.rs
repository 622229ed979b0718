use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },
    #[error("series vanishes identically up to O(q^{order})")]
    ZeroDivisor { order: i64 },
    #[error("valuation {valuation} is not divisible by {n}")]
    ValuationNotDivisible { valuation: i64, n: u32 },
    #[error("leading coefficient {coeff} has no exact {n}-th root")]
    LeadingCoefficientNotPower { coeff: String, n: u32 },
    #[error("series is not a unit: constant term is {constant}")]
    NotUnit { constant: String },
    #[error("twist of a series with fractional offset {offset} needs an explicit branch scalar")]
    BranchMissing { offset: String },
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("metric entry ({row}, {col}) is not constant")]
    NonConstantMetric { row: usize, col: usize },
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
