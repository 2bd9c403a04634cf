use std::path::PathBuf;

use thiserror::Error;

use crate::states::EnsembleValidation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("2x2 matrix is not symmetric (|t01 - t10| = {deviation:e})")]
    NotSymmetric { deviation: f64 },

    #[error("diagonal gap {gap} exceeds singular value gap {sigma1} - {sigma2}")]
    LemmaViolation { gap: f64, sigma1: f64, sigma2: f64 },

    #[error("invalid bipartite shape {d1}x{d2}: {reason}")]
    InvalidShape { d1: usize, d2: usize, reason: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("operation requires {expected}, got {found}")]
    WrongShape { expected: String, found: String },

    #[error("state is not normalized (norm^2 = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("zero amplitude vector cannot be normalized")]
    ZeroState,

    #[error("weight {0} outside (0, 1]")]
    InvalidWeight(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("ensemble fails validation: {}", .0.summary())]
    InvalidEnsemble(Box<EnsembleValidation>),

    #[error("pure concurrence formulas disagree: purity form {purity_form} vs generator sum {generator_form}")]
    FormulaMismatch { purity_form: f64, generator_form: f64 },

    #[error("generator index ({i}, {j}) invalid for local dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },

    #[error("remixed decomposition has vanishing weight {weight:e}")]
    DegenerateDecomposition { weight: f64 },

    #[error("matrix is not unitary (max |U U^dagger - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
