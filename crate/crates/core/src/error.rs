use thiserror::Error;

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("cannot parse signature {0:?}, expected `p,q`")]
    SignatureSyntax(String),

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("grade {grade} out of range for n = {n}")]
    GradeOutOfRange { grade: usize, n: usize },

    #[error("blade mask {mask:#b} not valid for n = {n}")]
    BladeOutOfRange { mask: u32, n: usize },

    #[error("generator index {index} not in 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("cannot parse multivector: {0}")]
    Parse(String),

    #[error("Bernstein degree must be at least 1")]
    ZeroDegree,

    #[error("unsupported domain dimension {0} (expected 1 or 2)")]
    Dimension(usize),

    #[error("grid resolution must be at least 2, got {0}")]
    Resolution(usize),

    #[error("unknown target function {0:?}")]
    UnknownTarget(String),
}

pub type Result<T, E = CliffordError> = std::result::Result<T, E>;
