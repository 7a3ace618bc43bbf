use thiserror::Error;

use crate::arith::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: char, right: char },

    #[error("division by zero")]
    DivisionByZero,

    #[error("index {value} out of range for {what} (need {bound})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        bound: &'static str,
    },

    #[error("polynomial is not homogeneous in {vars}")]
    NotHomogeneous { vars: String },

    #[error("polynomial uses variables outside {allowed}")]
    UnexpectedVariable { allowed: String },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("cannot factor the zero polynomial")]
    ZeroFactorization,

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("cofactor expansion limited to size {max}, got {size}")]
    CofactorTooLarge { size: usize, max: usize },

    #[error("fraction-free elimination hit an inexact division")]
    InexactDivision,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("certificate check failed: {0}")]
    CertificateFailed(String),
}
