//! Bipartite quantum states: pure states, density matrices and rank-2
//! ensembles, with the partial trace and the two-qubit spin flip.
//!
//! Basis ordering is row-major: the amplitude of `|ij⟩` (with `i` indexing
//! subsystem A and `j` subsystem B) sits at position `i * d2 + j`.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{check_psd, hermitian_eigensystem, inner, norm_sqr, ComplexMatrix, ONE, ZERO};
use crate::tolerances::{HERMITIAN, LINEAR_INDEPENDENCE, NORMALIZATION, TRACE, WEIGHT_SUM};

/// Default cap on `d1 * d2`.
pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// Local dimensions of `H_A ⊗ H_B`.
///
/// A shape with `d2 == 1` describes a single system of dimension `d1`; it is
/// only built through [`BipartiteShape::single`] and is accepted by the
/// coherence measures but rejected by every entanglement measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BipartiteShape {
    d1: usize,
    d2: usize,
}

impl BipartiteShape {
    pub fn new(d1: usize, d2: usize) -> Result<Self> {
        Self::with_cap(d1, d2, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(d1: usize, d2: usize, cap: usize) -> Result<Self> {
        if d1 < 2 || d2 < 2 {
            return Err(Error::InvalidShape {
                d1,
                d2,
                reason: "both local dimensions must be at least 2".into(),
            });
        }
        Self::checked(d1, d2, cap)
    }

    /// A single system of dimension `d` (stored as `d ⊗ 1`).
    pub fn single(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidShape {
                d1: d,
                d2: 1,
                reason: "dimension must be at least 2".into(),
            });
        }
        Self::checked(d, 1, DEFAULT_DIMENSION_CAP)
    }

    fn checked(d1: usize, d2: usize, cap: usize) -> Result<Self> {
        match d1.checked_mul(d2) {
            Some(total) if total <= cap => Ok(Self { d1, d2 }),
            _ => Err(Error::InvalidShape {
                d1,
                d2,
                reason: format!("total dimension exceeds cap {cap}"),
            }),
        }
    }

    pub fn qubits() -> Self {
        Self { d1: 2, d2: 2 }
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dim(&self) -> usize {
        self.d1 * self.d2
    }

    pub fn is_bipartite(&self) -> bool {
        self.d2 >= 2
    }

    pub fn is_two_qubit(&self) -> bool {
        self.d1 == 2 && self.d2 == 2
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.d2 + j
    }

    pub(crate) fn require_bipartite(&self) -> Result<()> {
        if self.is_bipartite() {
            Ok(())
        } else {
            Err(Error::WrongShape {
                expected: "a bipartite shape".into(),
                found: self.to_string(),
            })
        }
    }

    pub(crate) fn require_two_qubit(&self) -> Result<()> {
        if self.is_two_qubit() {
            Ok(())
        } else {
            Err(Error::WrongShape {
                expected: "2x2".into(),
                found: self.to_string(),
            })
        }
    }
}

impl fmt::Display for BipartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bipartite() {
            write!(f, "{}x{}", self.d1, self.d2)
        } else {
            write!(f, "{}", self.d1)
        }
    }
}

/// Normalized amplitudes over the product basis plus a separate weight `p`,
/// so the state stands for the subnormalized vector `√p |ψ⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    shape: BipartiteShape,
    amplitudes: Vec<Complex64>,
    weight: f64,
}

impl PureState {
    /// Wraps amplitudes that are already normalized to within `1e-10`.
    pub fn new(shape: BipartiteShape, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_len(shape, amplitudes.len())?;
        let norm_sq = norm_sqr(&amplitudes);
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORMALIZATION {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self {
            shape,
            amplitudes,
            weight: 1.0,
        })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(shape: BipartiteShape, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        check_len(shape, amplitudes.len())?;
        let norm_sq = norm_sqr(&amplitudes);
        if norm_sq == 0.0 || !norm_sq.is_finite() {
            return Err(Error::ZeroState);
        }
        let inv = 1.0 / norm_sq.sqrt();
        amplitudes.iter_mut().for_each(|z| *z *= inv);
        Ok(Self {
            shape,
            amplitudes,
            weight: 1.0,
        })
    }

    pub fn from_real(shape: BipartiteShape, amplitudes: &[f64]) -> Result<Self> {
        Self::normalized(shape, amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Computational basis state `|ij⟩`.
    pub fn basis(shape: BipartiteShape, i: usize, j: usize) -> Self {
        let mut amplitudes = vec![ZERO; shape.dim()];
        amplitudes[shape.index(i, j)] = ONE;
        Self {
            shape,
            amplitudes,
            weight: 1.0,
        }
    }

    pub fn with_weight(mut self, weight: f64) -> Result<Self> {
        if !(weight > 0.0 && weight <= 1.0) {
            return Err(Error::InvalidWeight(weight));
        }
        self.weight = weight;
        Ok(self)
    }

    pub fn shape(&self) -> BipartiteShape {
        self.shape
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amplitudes[self.shape.index(i, j)]
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// `√p · φ`
    pub fn subnormalized_amplitudes(&self) -> Vec<Complex64> {
        let s = self.weight.sqrt();
        self.amplitudes.iter().map(|z| z * s).collect()
    }

    /// `p |ψ⟩⟨ψ|`
    pub fn weighted_projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes).scale_real(self.weight)
    }

    /// The normalized state `|ψ⟩⟨ψ|` as a density matrix (weight dropped).
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            shape: self.shape,
            matrix: ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
        }
    }

    pub fn with_global_phase(&self, phase: f64) -> Self {
        let z = Complex64::from_polar(1.0, phase);
        Self {
            amplitudes: self.amplitudes.iter().map(|a| a * z).collect(),
            ..self.clone()
        }
    }

    /// `U |ψ⟩` for a unitary acting on the flattened space.
    pub fn transformed(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.shape.dim() || unitary.cols() != self.shape.dim() {
            return Err(Error::ShapeMismatch(format!(
                "unitary is {}x{}, state dimension is {}",
                unitary.rows(),
                unitary.cols(),
                self.shape.dim()
            )));
        }
        let mut out = Self::normalized(self.shape, unitary.mul_vec(&self.amplitudes))?;
        out.weight = self.weight;
        Ok(out)
    }
}

fn check_len(shape: BipartiteShape, len: usize) -> Result<()> {
    if len != shape.dim() {
        return Err(Error::DimensionMismatch {
            expected: shape.dim(),
            found: len,
        });
    }
    Ok(())
}

/// Hermitian, unit-trace, positive semidefinite matrix over a declared shape.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    shape: BipartiteShape,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(shape: BipartiteShape, matrix: ComplexMatrix) -> Result<Self> {
        let n = shape.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: matrix.rows() * matrix.cols(),
            });
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > HERMITIAN {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE || trace.im.abs() > TRACE {
            return Err(Error::InvalidDensity(format!("trace {trace} != 1")));
        }
        check_psd(&hermitian_eigensystem(&matrix)?.values)?;
        Ok(Self { shape, matrix })
    }

    pub fn maximally_mixed(shape: BipartiteShape) -> Self {
        let n = shape.dim();
        Self {
            shape,
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    /// `p ρ1 + (1 - p) ρ2`
    pub fn mix(p: f64, a: &DensityMatrix, b: &DensityMatrix) -> Result<Self> {
        if a.shape != b.shape {
            return Err(Error::ShapeMismatch(format!("{} vs {}", a.shape, b.shape)));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidWeight(p));
        }
        Ok(Self {
            shape: a.shape,
            matrix: &a.matrix.scale_real(p) + &b.matrix.scale_real(1.0 - p),
        })
    }

    pub fn shape(&self) -> BipartiteShape {
        self.shape
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigensystem(&self.matrix)
            .map(|e| e.values)
            .expect("density matrices are Hermitian")
    }

    /// `U ρ U^dagger` for a unitary on the flattened space.
    pub fn transformed(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.shape.dim() || unitary.cols() != self.shape.dim() {
            return Err(Error::ShapeMismatch(format!(
                "unitary is {}x{}, state dimension is {}",
                unitary.rows(),
                unitary.cols(),
                self.shape.dim()
            )));
        }
        let m = &(unitary * &self.matrix) * &unitary.adjoint();
        Ok(Self {
            shape: self.shape,
            matrix: m,
        })
    }
}

/// `ρ = p1 |ψ1⟩⟨ψ1| + p2 |ψ2⟩⟨ψ2|` with two linearly independent components.
#[derive(Debug, Clone, PartialEq)]
pub struct Rank2Ensemble {
    p1: f64,
    p2: f64,
    psi1: PureState,
    psi2: PureState,
}

impl Rank2Ensemble {
    /// Validates and builds an ensemble. Component weights are reset to 1;
    /// the mixing weights live on the ensemble.
    pub fn new(p1: f64, p2: f64, psi1: PureState, psi2: PureState) -> Result<Self> {
        let report = validate_ensemble(p1, p2, &psi1, &psi2);
        if !report.pass {
            return Err(Error::InvalidEnsemble(Box::new(report)));
        }
        Ok(Self {
            p1,
            p2,
            psi1: PureState { weight: 1.0, ..psi1 },
            psi2: PureState { weight: 1.0, ..psi2 },
        })
    }

    /// `p2` is taken as `1 - p1`.
    pub fn from_weight(p1: f64, psi1: PureState, psi2: PureState) -> Result<Self> {
        Self::new(p1, 1.0 - p1, psi1, psi2)
    }

    pub fn shape(&self) -> BipartiteShape {
        self.psi1.shape
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn weights(&self) -> [f64; 2] {
        [self.p1, self.p2]
    }

    pub fn psi1(&self) -> &PureState {
        &self.psi1
    }

    pub fn psi2(&self) -> &PureState {
        &self.psi2
    }

    pub fn components(&self) -> [&PureState; 2] {
        [&self.psi1, &self.psi2]
    }

    /// `|Ψ_a⟩ = √p_a |ψ_a⟩` for `a` in `{0, 1}`.
    pub fn subnormalized(&self, a: usize) -> PureState {
        let (p, psi) = match a {
            0 => (self.p1, &self.psi1),
            1 => (self.p2, &self.psi2),
            _ => panic!("ensemble component index {a} out of range"),
        };
        PureState {
            weight: p,
            ..psi.clone()
        }
    }

    pub fn density(&self) -> Result<DensityMatrix> {
        density_from_ensemble(self)
    }

    /// Same ensemble with the components replaced by `e^{iα}|ψ1⟩`, `e^{iβ}|ψ2⟩`.
    pub fn with_phases(&self, alpha: f64, beta: f64) -> Self {
        Self {
            psi1: self.psi1.with_global_phase(alpha),
            psi2: self.psi2.with_global_phase(beta),
            ..self.clone()
        }
    }
}

/// One invariant of a rank-2 ensemble with its measured value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub value: f64,
    pub requirement: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleValidation {
    pub checks: Vec<ValidationCheck>,
    pub pass: bool,
}

impl EnsembleValidation {
    pub fn check(&self, name: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} = {:e} (need {})", c.name, c.value, c.requirement))
            .collect();
        if failed.is_empty() {
            "all checks pass".into()
        } else {
            failed.join("; ")
        }
    }
}

/// Checks every rank-2 ensemble invariant and reports the measured values.
pub fn validate_ensemble(p1: f64, p2: f64, psi1: &PureState, psi2: &PureState) -> EnsembleValidation {
    let mut checks = Vec::new();
    let in_open_unit = |p: f64| p > 0.0 && p < 1.0;
    checks.push(ValidationCheck {
        name: "p1_range",
        value: p1,
        requirement: "0 < p1 < 1".into(),
        pass: in_open_unit(p1),
    });
    checks.push(ValidationCheck {
        name: "p2_range",
        value: p2,
        requirement: "0 < p2 < 1".into(),
        pass: in_open_unit(p2),
    });
    let sum_dev = (p1 + p2 - 1.0).abs();
    checks.push(ValidationCheck {
        name: "weight_sum",
        value: sum_dev,
        requirement: format!("|p1 + p2 - 1| <= {WEIGHT_SUM:e}"),
        pass: sum_dev <= WEIGHT_SUM,
    });
    let same_shape = psi1.shape == psi2.shape;
    checks.push(ValidationCheck {
        name: "shape_match",
        value: if same_shape { 0.0 } else { 1.0 },
        requirement: "psi1 and psi2 share a shape".into(),
        pass: same_shape,
    });
    for (name, psi) in [("psi1_norm", psi1), ("psi2_norm", psi2)] {
        let dev = (norm_sqr(&psi.amplitudes) - 1.0).abs();
        checks.push(ValidationCheck {
            name,
            value: dev,
            requirement: format!("|‖ψ‖² - 1| <= {NORMALIZATION:e}"),
            pass: dev <= NORMALIZATION,
        });
    }
    let gram = if same_shape {
        1.0 - inner(&psi1.amplitudes, &psi2.amplitudes).norm_sqr()
    } else {
        f64::NAN
    };
    checks.push(ValidationCheck {
        name: "linear_independence",
        value: gram,
        requirement: format!("1 - |<ψ1|ψ2>|² > {LINEAR_INDEPENDENCE:e}"),
        pass: gram > LINEAR_INDEPENDENCE,
    });
    let pass = checks.iter().all(|c| c.pass);
    EnsembleValidation { checks, pass }
}

/// `ρ = p1 |ψ1⟩⟨ψ1| + p2 |ψ2⟩⟨ψ2|`, validated as a density matrix.
pub fn density_from_ensemble(e: &Rank2Ensemble) -> Result<DensityMatrix> {
    if e.psi1.shape != e.psi2.shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", e.psi1.shape, e.psi2.shape)));
    }
    let m = ensemble_matrix(e);
    DensityMatrix::new(e.shape(), m)
}

/// Unvalidated `p1 |ψ1⟩⟨ψ1| + p2 |ψ2⟩⟨ψ2|`.
pub(crate) fn ensemble_matrix(e: &Rank2Ensemble) -> ComplexMatrix {
    let a = ComplexMatrix::outer(&e.psi1.amplitudes, &e.psi1.amplitudes).scale_real(e.p1);
    let b = ComplexMatrix::outer(&e.psi2.amplitudes, &e.psi2.amplitudes).scale_real(e.p2);
    &a + &b
}

/// `ρ_A = Tr_B ρ`, a `d1 x d1` matrix.
pub fn partial_trace_a(rho: &DensityMatrix) -> ComplexMatrix {
    reduce_a(rho.shape, rho.matrix())
}

pub(crate) fn reduce_a(shape: BipartiteShape, m: &ComplexMatrix) -> ComplexMatrix {
    let (d1, d2) = (shape.d1(), shape.d2());
    ComplexMatrix::from_fn(d1, d1, |i, k| (0..d2).map(|j| m[(i * d2 + j, k * d2 + j)]).sum())
}

/// `σy ⊗ σy`, real with entries ±1 on the anti-diagonal.
pub fn sigma_y_sigma_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 3)] = -ONE;
    m[(3, 0)] = -ONE;
    m[(1, 2)] = ONE;
    m[(2, 1)] = ONE;
    m
}

/// `ρ̃ = (σy ⊗ σy) ρ* (σy ⊗ σy)` for two-qubit states.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    rho.shape.require_two_qubit()?;
    Ok(spin_flip_matrix(rho.matrix()))
}

pub(crate) fn spin_flip_matrix(m: &ComplexMatrix) -> ComplexMatrix {
    let yy = sigma_y_sigma_y();
    &(&yy * &m.conj()) * &yy
}

/// `⟨a|b⟩` of the normalized amplitude vectors.
pub fn overlap(a: &PureState, b: &PureState) -> Result<Complex64> {
    if a.shape != b.shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", a.shape, b.shape)));
    }
    Ok(inner(&a.amplitudes, &b.amplitudes))
}

/// Named states used throughout tests and examples.
pub mod catalog {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn qubits(amps: [Complex64; 4]) -> PureState {
        PureState::new(BipartiteShape::qubits(), amps.to_vec()).expect("catalog states are normalized")
    }

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    /// (|00⟩ + |11⟩)/√2
    pub fn phi_plus() -> PureState {
        qubits([r(FRAC_1_SQRT_2), ZERO, ZERO, r(FRAC_1_SQRT_2)])
    }

    /// (|00⟩ - |11⟩)/√2
    pub fn phi_minus() -> PureState {
        qubits([r(FRAC_1_SQRT_2), ZERO, ZERO, r(-FRAC_1_SQRT_2)])
    }

    /// √(3/8)(|00⟩ + |11⟩) + i√(1/8)(|01⟩ + |10⟩)
    pub fn example_psi1() -> PureState {
        let a = r((3.0f64 / 8.0).sqrt());
        let b = Complex64::new(0.0, (1.0f64 / 8.0).sqrt());
        qubits([a, b, b, a])
    }

    /// √(3/8)(|00⟩ + |11⟩) + √(1/8)(|01⟩ + |10⟩)
    pub fn example_psi2() -> PureState {
        let a = r((3.0f64 / 8.0).sqrt());
        let b = r((1.0f64 / 8.0).sqrt());
        qubits([a, b, b, a])
    }

    /// `P |ψ1⟩⟨ψ1| + (1 - P) |ψ2⟩⟨ψ2|` with the two states above.
    pub fn example_ensemble(p: f64) -> Result<Rank2Ensemble> {
        Rank2Ensemble::from_weight(p, example_psi1(), example_psi2())
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use approx::assert_abs_diff_eq;

    fn qubits() -> BipartiteShape {
        BipartiteShape::qubits()
    }

    #[test]
    fn shape_rules() {
        assert!(BipartiteShape::new(1, 3).is_err());
        assert!(BipartiteShape::new(8, 9).is_err());
        assert!(BipartiteShape::with_cap(8, 9, 100).is_ok());
        let s = BipartiteShape::new(3, 2).unwrap();
        assert_eq!((s.dim(), s.index(2, 1)), (6, 5));
        assert_eq!(s.to_string(), "3x2");
        let single = BipartiteShape::single(3).unwrap();
        assert!(!single.is_bipartite());
        assert_eq!(single.to_string(), "3");
    }

    #[test]
    fn pure_state_normalization() {
        let amps = vec![ONE, ONE, ZERO, ZERO];
        assert!(matches!(
            PureState::new(qubits(), amps.clone()),
            Err(Error::NotNormalized { .. })
        ));
        let psi = PureState::normalized(qubits(), amps).unwrap();
        assert_abs_diff_eq!(norm_sqr(psi.amplitudes()), 1.0, epsilon = 1e-15);
        assert!(PureState::normalized(qubits(), vec![ZERO; 4]).is_err());
        assert!(psi.clone().with_weight(0.0).is_err());
        assert!(psi.with_weight(1.5).is_err());
    }

    #[test]
    fn orthogonal_components_near_pure_weight() {
        let e = Rank2Ensemble::from_weight(
            0.999999,
            PureState::basis(qubits(), 0, 0),
            PureState::basis(qubits(), 0, 1),
        )
        .unwrap();
        let rho = density_from_ensemble(&e).unwrap();
        let ev = rho.eigenvalues();
        assert_abs_diff_eq!(ev[0], 0.999999, epsilon = 1e-12);
        assert_abs_diff_eq!(ev[1], 1e-6, epsilon = 1e-12);
        assert!(ev[2].abs() < 1e-9);
    }

    #[test]
    fn bell_pair_mixture_is_diagonal() {
        let e = Rank2Ensemble::from_weight(0.5, phi_plus(), phi_minus()).unwrap();
        let rho = density_from_ensemble(&e).unwrap();
        let expected = ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]);
        assert!(rho.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn example_ensemble_density() {
        // P = 1/2: ρ = (ρ1 + ρ2)/2; entries from the amplitudes directly
        let e = example_ensemble(0.5).unwrap();
        let rho = density_from_ensemble(&e).unwrap();
        let m = rho.matrix();
        assert_abs_diff_eq!(m[(0, 0)].re, 3.0 / 8.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(1, 1)].re, 1.0 / 8.0, epsilon = 1e-15);
        // ⟨00|ρ|01⟩ = ½[√(3/8)·(-i√(1/8)) + √(3/8)√(1/8)] = (√3/16)(1 - i)
        let s = 3f64.sqrt() / 16.0;
        assert_abs_diff_eq!(m[(0, 1)].re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(0, 1)].im, -s, epsilon = 1e-15);
        // ⟨01|ρ|10⟩ = ½(1/8 + 1/8)
        assert_abs_diff_eq!(m[(1, 2)].re, 1.0 / 8.0, epsilon = 1e-15);
        assert!(rho.eigenvalues()[2].abs() < 1e-9);
    }

    #[test]
    fn partial_traces() {
        let prod = PureState::basis(qubits(), 0, 0).density();
        let ra = partial_trace_a(&prod);
        assert!(ra.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0])) < 1e-15);

        let bell = partial_trace_a(&phi_plus().density());
        assert!(bell.max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 1e-15);

        let ex = partial_trace_a(&example_psi1().density());
        let purity = (&ex * &ex).trace().re;
        assert_abs_diff_eq!(purity, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn spin_flip_cases() {
        let bell = phi_plus().density();
        assert!(spin_flip(&bell).unwrap().max_abs_diff(bell.matrix()) < 1e-15);

        let mixed = DensityMatrix::maximally_mixed(qubits());
        assert!(spin_flip(&mixed).unwrap().max_abs_diff(mixed.matrix()) < 1e-15);

        let flipped = spin_flip(&PureState::basis(qubits(), 0, 0).density()).unwrap();
        assert!(flipped.max_abs_diff(PureState::basis(qubits(), 1, 1).density().matrix()) < 1e-15);

        let qutrits = DensityMatrix::maximally_mixed(BipartiteShape::new(3, 3).unwrap());
        assert!(matches!(spin_flip(&qutrits), Err(Error::WrongShape { .. })));
    }

    #[test]
    fn overlaps() {
        let a = PureState::basis(qubits(), 0, 0);
        let b = PureState::basis(qubits(), 0, 1);
        assert_eq!(overlap(&a, &a).unwrap(), ONE);
        assert_eq!(overlap(&a, &b).unwrap(), ZERO);
        let z = overlap(&example_psi1(), &example_psi2()).unwrap();
        assert_abs_diff_eq!(z.re, 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(z.im, -0.25, epsilon = 1e-15);
        let other = PureState::basis(BipartiteShape::new(2, 3).unwrap(), 0, 0);
        assert!(overlap(&a, &other).is_err());
    }

    #[test]
    fn validation_reports() {
        let a = PureState::basis(qubits(), 0, 0);
        let b = PureState::basis(qubits(), 1, 1);
        assert!(validate_ensemble(0.3, 0.7, &a, &b).pass);

        let bad_sum = validate_ensemble(0.5, 0.51, &a, &b);
        assert!(!bad_sum.pass);
        assert_abs_diff_eq!(bad_sum.check("weight_sum").unwrap().value, 0.01, epsilon = 1e-12);

        let same = validate_ensemble(0.5, 0.5, &a, &a);
        let li = same.check("linear_independence").unwrap();
        assert!(!li.pass);
        assert_eq!(li.value, 0.0);
        assert!(Rank2Ensemble::from_weight(0.5, a.clone(), a.with_global_phase(0.4)).is_err());
    }

    #[test]
    fn degenerate_weights_rejected() {
        let a = PureState::basis(qubits(), 0, 0);
        let b = PureState::basis(qubits(), 1, 1);
        assert!(Rank2Ensemble::from_weight(1.0, a.clone(), b.clone()).is_err());
        assert!(Rank2Ensemble::from_weight(0.0, a, b).is_err());
    }

    #[test]
    fn density_validation_errors() {
        let s = qubits();
        let not_unit = ComplexMatrix::identity(4);
        assert!(matches!(DensityMatrix::new(s, not_unit), Err(Error::InvalidDensity(_))));
        let negative = ComplexMatrix::from_real_diagonal(&[1.5, -0.5, 0.0, 0.0]);
        assert!(matches!(DensityMatrix::new(s, negative), Err(Error::NotPsd { .. })));
    }
}
