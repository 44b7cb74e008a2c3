use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("invalid modulus {0}: must be nonzero and not a unit")]
    InvalidModulus(String),
    #[error("operands live in different residue rings")]
    ModulusMismatch,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("equation {a}*x = {b} has no solution")]
    Unsolvable { a: String, b: String },
    #[error("enumeration of {size} candidates exceeds the bound {bound}")]
    RingTooLarge { size: String, bound: u64 },
    #[error("malformed divisor chain: {0}")]
    MalformedChain(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible (det = {0})")]
    NotInvertible(String),
    #[error("block {block} violates the required form at ({row}, {col}): {reason}")]
    StructureViolation {
        block: &'static str,
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no invertible sample found after {0} tries")]
    SamplingExhausted(usize),
    #[error("size {0} outside the supported range")]
    SizeOutOfRange(usize),
    #[error("malformed input: {0}")]
    MalformedInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
