use thiserror::Error;

/// Errors raised by the exact algebra, decomposition and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("angle {0} is not a multiple of pi/12")]
    UnrepresentableAngle(String),

    #[error("cosine/sine pair does not satisfy cos^2 + sin^2 = 1")]
    NotUnitAngle,

    #[error("Laurent polynomial is not self-reciprocal: {0}")]
    NotSelfReciprocal(String),

    #[error("{what} leaves the field Q(i, sqrt2, sqrt3): {detail}")]
    OutsideTower { what: &'static str, detail: String },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("{0} does not divide the degree")]
    NotADivisor(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    #[error("could not classify: {0}")]
    Unclassified(String),

    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },

    #[error("{0}")]
    Evaluation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
