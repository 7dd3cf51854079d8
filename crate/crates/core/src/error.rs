use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{e} exceeds 2^16")]
    OrderOverflow { p: u32, e: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("point {0} is singular on the surface")]
    SingularPoint(String),
    #[error("surface validation failed: {0}")]
    InvalidSurface(String),
    #[error("no cubic surface without rational lines found after {0} attempts")]
    NotFound(u64),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("evaluation set is empty")]
    EmptyEvaluationSet,
    #[error("evaluation rank {rank} differs from the expected dimension {expected}")]
    DimensionMismatch { rank: usize, expected: usize },
    #[error("degree {m} out of range: {reason}")]
    DegreeOutOfRange { m: u32, reason: String },
    #[error("the zero matrix does not define a code")]
    ZeroCode,
    #[error("cannot remove every coordinate")]
    PunctureAll,
    #[error("position {0} out of range")]
    PositionOutOfRange(usize),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line has only {available} usable points, {needed} needed")]
    InsufficientPoints { available: usize, needed: usize },
    #[error("divisor class rank {got} does not match lattice rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("D.(D+K) = {0} is odd; not the class of a curve")]
    ParityViolation(i64),
    #[error("invalid class set: {0}")]
    InvalidClassSet(String),
    #[error("empty set of divisor classes")]
    EmptyClassSet,
    #[error("permutation is not an automorphism of the code")]
    NotAnAutomorphism,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
