//! Numerical tolerances shared by every module.
//!
//! Each threshold lives here once; code and tests refer to these names
//! rather than repeating literals.

/// Slack allowed on the "≤" side of every verified inequality.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Agreement required between two routes that compute the same quantity.
pub const EQUALITY: f64 = 1e-8;

/// Agreement between the two pure-state concurrence formulas, compared on C².
pub const FORMULA_AGREEMENT: f64 = 1e-9;

/// Maximum entry-wise deviation from Hermiticity accepted as input.
pub const HERMITIAN: f64 = 1e-9;

/// Eigenvalues in `[-PSD_CLIP, 0)` are treated as round-off and clipped to zero.
pub const PSD_CLIP: f64 = 1e-9;

/// Trace deviation accepted for density matrices.
pub const TRACE: f64 = 1e-9;

/// Symmetry check on 2x2 inputs whose symmetry is structural.
pub const SYMMETRIC_2X2: f64 = 1e-12;

/// Symmetry of constructed τ matrices.
pub const TAU_SYMMETRY: f64 = 1e-10;

/// Normalization of stored amplitude vectors.
pub const NORMALIZATION: f64 = 1e-10;

/// Weight-sum deviation allowed in a rank-2 ensemble.
pub const WEIGHT_SUM: f64 = 1e-12;

/// Threshold on `1 - |<ψ1|ψ2>|²` below which two states count as dependent.
pub const LINEAR_INDEPENDENCE: f64 = 1e-10;

/// A remixed component lighter than this is rejected as degenerate.
pub const DEGENERATE_WEIGHT: f64 = 1e-10;

/// Unitarity check for mixing matrices and basis-change files.
pub const UNITARY: f64 = 1e-9;

/// Off-diagonal Frobenius norm at which a Jacobi sweep counts as converged.
pub const JACOBI_CONVERGENCE: f64 = 1e-12;

/// Sweep budget for the Jacobi eigensolver.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of ρ at or below this are outside its support in the
/// spin-flip spectral route. Sits well above Jacobi round-off (~1e-16)
/// for unit-trace matrices.
pub const SUPPORT_CUTOFF: f64 = 1e-14;

/// Resampling budget when a sampled mixing unitary yields a degenerate split.
pub const MAX_RESAMPLES: usize = 100;
