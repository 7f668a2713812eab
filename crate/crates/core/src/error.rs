use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SboxError {
    #[error("expected {expected} table entries, got {actual}")]
    Length { expected: usize, actual: usize },

    #[error("rotation amount must be in 1..=7, got {0}")]
    InvalidRotation(u32),

    #[error("affine matrix is not invertible over GF(2)")]
    SingularMatrix,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
