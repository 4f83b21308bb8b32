use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("coefficient literal `{0}` is out of range")]
    CoefficientRange(String),
    #[error("{0} is not a usable prime modulus")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular over the coefficient field")]
    SingularMatrix,
    #[error("matrix shape {rows}x{cols} invalid: {reason}")]
    Shape {
        rows: usize,
        cols: usize,
        reason: &'static str,
    },
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("order {0} is not usable here")]
    WrongOrderKind(String),
    #[error("target of degree {degree} not below truncation level {trunc}")]
    DegreeNotBelowTruncation { degree: u32, trunc: u32 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("generation retry budget of {0} exhausted")]
    RetryBudgetExhausted(u32),
    #[error("polynomial is not divisible")]
    NotDivisible,
}
