//! Error type shared by the matrix kernel and the class checks.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OpClassError {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    BadDimensions { rows: usize, cols: usize },

    #[error("entry buffer has {got} entries, expected {expected}")]
    BadEntryCount { expected: usize, got: usize },

    #[error("non-finite entry at flat index {index}")]
    NonFiniteEntry { index: usize },

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: asymmetry residual {residual:.3e} exceeds {bound:.3e}")]
    NotHermitian { residual: f64, bound: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eig:.3e} below {bound:.3e}")]
    NotPsd { min_eig: f64, bound: f64 },

    #[error("exponent must lie in (0, 1], got {p}")]
    BadExponent { p: f64 },

    #[error("tolerance out of range: {what}")]
    BadTolerance { what: String },

    #[error("invalid shift spec: {what}")]
    BadShiftSpec { what: String },

    #[error("two equivalent criteria disagree: primary margin {primary:.3e}, secondary margin {secondary:.3e}")]
    CriterionMismatch { primary: f64, secondary: f64 },

    #[error("could not generate a hypothesis-satisfying instance for {theorem} after {attempts} attempts")]
    GenerationFailed { theorem: String, attempts: usize },

    #[error("unknown theorem id {id}; valid ids: {valid}")]
    UnknownTheorem { id: String, valid: String },

    #[error("bad parameter: {what}")]
    BadParameter { what: String },

    #[error("bundle has no matrix named {key}")]
    MissingMatrix { key: String },

    #[error("bundle product {key} differs from the product of its factors by {distance:.3e}")]
    BundleMismatch { key: String, distance: f64 },

    #[error("bundle has no parameter named {key}")]
    MissingParameter { key: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("document error: {0}")]
    Document(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, OpClassError>;
