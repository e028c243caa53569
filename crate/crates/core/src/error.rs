use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: ({0}, {1}) vs ({2}, {3})")]
    ArityMismatch(usize, usize, usize, usize),

    #[error("division leaves a nonzero remainder")]
    NonzeroRemainder,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation point has a zero coordinate at index {0}")]
    ZeroCoordinate(usize),

    #[error("evaluation point has wrong length: expected {expected}, got {got}")]
    PointLength { expected: usize, got: usize },

    #[error("half-integer exponent at index {0} needs a square coordinate")]
    HalfIntegerExponent(usize),

    #[error("substitution map is not injective or out of range")]
    NonInjectiveMap,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("delta part is not constant: {0}")]
    NotConstantDelta(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("composite partition {0} is not standard")]
    NonStandard(String),

    #[error("Weyl group sum of size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("character has a non-integral coefficient")]
    NonIntegral,

    #[error("identity check failed: {0}")]
    IdentityViolation(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}
