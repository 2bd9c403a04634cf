//! l1-norm coherence and its convex roof.
//!
//! The reference basis is the computational basis of the flattened
//! `d1·d2` space unless a [`CoherenceBasis`] carries a basis change.

use serde::Serialize;

use crate::decompositions::sample_with_identity;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::report::InequalityReport;
use crate::states::{DensityMatrix, PureState, Rank2Ensemble};
use crate::tolerances::UNITARY;

/// A coherence quantifier evaluated on a (possibly subnormalized) density
/// matrix in the reference basis.
pub trait CoherenceMeasure {
    fn name(&self) -> &'static str;
    fn evaluate(&self, m: &ComplexMatrix) -> f64;
}

/// `Σ_{i≠j} |ρ_ij|`
#[derive(Debug, Clone, Copy, Default)]
pub struct L1Norm;

impl CoherenceMeasure for L1Norm {
    fn name(&self) -> &'static str {
        "l1"
    }

    fn evaluate(&self, m: &ComplexMatrix) -> f64 {
        let mut s = 0.0;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    s += m[(i, j)].norm();
                }
            }
        }
        s
    }
}

/// Reference basis `{|i⟩}`. `change` maps states into it: a state ρ is
/// measured as `U ρ U^dagger`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceBasis {
    dimension: usize,
    change: Option<ComplexMatrix>,
}

impl CoherenceBasis {
    pub fn computational(dimension: usize) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: dimension,
            });
        }
        Ok(Self {
            dimension,
            change: None,
        })
    }

    pub fn rotated(unitary: ComplexMatrix) -> Result<Self> {
        if !unitary.is_square() || unitary.rows() < 2 {
            return Err(Error::NotSquare {
                rows: unitary.rows(),
                cols: unitary.cols(),
            });
        }
        let deviation = unitary.unitary_deviation();
        if deviation > UNITARY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self {
            dimension: unitary.rows(),
            change: Some(unitary),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn change(&self) -> Option<&ComplexMatrix> {
        self.change.as_ref()
    }

    /// `C_l1(U ρ U^dagger)`
    pub fn l1_coherence(&self, rho: &DensityMatrix) -> Result<f64> {
        if rho.shape().dim() != self.dimension {
            return Err(Error::ShapeMismatch(format!(
                "basis dimension {} vs state dimension {}",
                self.dimension,
                rho.shape().dim()
            )));
        }
        Ok(match &self.change {
            None => l1_coherence(rho),
            Some(u) => l1_coherence(&rho.transformed(u)?),
        })
    }

    pub fn l1_coherence_pure(&self, psi: &PureState) -> Result<f64> {
        if psi.shape().dim() != self.dimension {
            return Err(Error::ShapeMismatch(format!(
                "basis dimension {} vs state dimension {}",
                self.dimension,
                psi.shape().dim()
            )));
        }
        Ok(match &self.change {
            None => l1_coherence_pure(psi),
            Some(u) => l1_coherence_pure(&psi.transformed(u)?),
        })
    }
}

pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    L1Norm.evaluate(rho.matrix())
}

/// `C_l1(p |ψ⟩⟨ψ|) = p Σ_{i≠j} |φ_i||φ_j| = p ((Σ|φ_i|)² - Σ|φ_i|²)`.
pub fn l1_coherence_pure(psi: &PureState) -> f64 {
    let moduli: Vec<f64> = psi.amplitudes().iter().map(|z| z.norm()).collect();
    let sum: f64 = moduli.iter().sum();
    let sq: f64 = moduli.iter().map(|m| m * m).sum();
    psi.weight() * (sum * sum - sq).max(0.0)
}

/// `|C_l1(p1ρ1) - C_l1(p2ρ2)| ≤ C_l1(p1ρ1 + p2ρ2) ≤ C_l1(p1ρ1) + C_l1(p2ρ2)`.
pub fn triangle_check_l1(rho1: &DensityMatrix, rho2: &DensityMatrix, p1: f64) -> Result<InequalityReport> {
    if rho1.shape().dim() != rho2.shape().dim() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", rho1.shape(), rho2.shape())));
    }
    if !(p1 > 0.0 && p1 < 1.0) {
        return Err(Error::InvalidWeight(p1));
    }
    let p2 = 1.0 - p1;
    let a = p1 * l1_coherence(rho1);
    let b = p2 * l1_coherence(rho2);
    let mixed = &rho1.matrix().scale_real(p1) + &rho2.matrix().scale_real(p2);
    let middle = L1Norm.evaluate(&mixed);
    Ok(InequalityReport::new(
        format!(
            "l1 dim {}: |C(p1 r1)-C(p2 r2)| <= C(rho) <= C(p1 r1)+C(p2 r2)",
            rho1.shape().dim()
        ),
        (a - b).abs(),
        middle,
        Some(a + b),
    ))
}

/// Result of the sampled convex-roof search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoofSearch {
    /// Smallest decomposition average found; an upper estimate of the roof.
    pub estimate: f64,
    /// Averages of every sampled decomposition, in draw order.
    pub sampled_averages: Vec<f64>,
    /// `C_l1(ρ)`, a lower bound on the roof.
    pub l1_of_density: f64,
}

/// Minimizes `Σ_a q_a C_l1(φ_a)` over the given decomposition and
/// `samples - 1` Haar remixes.
pub fn convex_roof_l1_search(e: &Rank2Ensemble, samples: usize, rng_seed: u64) -> Result<RoofSearch> {
    let draws = sample_with_identity(e, samples, rng_seed)?;
    let sampled_averages: Vec<f64> = draws.iter().map(|d| d.avg_pure_l1).collect();
    let estimate = sampled_averages.iter().copied().fold(f64::INFINITY, f64::min);
    let l1_of_density = L1Norm.evaluate(&crate::states::ensemble_matrix(e));
    Ok(RoofSearch {
        estimate,
        sampled_averages,
        l1_of_density,
    })
}

/// Upper estimate of the convex-roof l1 norm from sampled decompositions.
pub fn convex_roof_l1_estimate(e: &Rank2Ensemble, samples: usize, rng_seed: u64) -> Result<f64> {
    Ok(convex_roof_l1_search(e, samples, rng_seed)?.estimate)
}

/// `|C_l1(Ψ1) - C_l1(Ψ2)| ≤ C_l1(ρ) ≤ roof estimate ≤ C_l1(Ψ1) + C_l1(Ψ2)`,
/// with `C_l1(ρ)` carried as the report's witness.
pub fn triangle_check_convex_roof_l1(e: &Rank2Ensemble, samples: usize, rng_seed: u64) -> Result<InequalityReport> {
    let search = convex_roof_l1_search(e, samples, rng_seed)?;
    Ok(roof_report(e, &search))
}

pub(crate) fn roof_report(e: &Rank2Ensemble, search: &RoofSearch) -> InequalityReport {
    let a = l1_coherence_pure(&e.subnormalized(0));
    let b = l1_coherence_pure(&e.subnormalized(1));
    InequalityReport::new(
        format!("convex-roof l1 {}: |C1-C2| <= C(rho) <= roof <= C1+C2", e.shape()),
        (a - b).abs(),
        search.estimate,
        Some(a + b),
    )
    .with_witness(search.l1_of_density)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;
    use crate::states::BipartiteShape;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn qubit() -> BipartiteShape {
        BipartiteShape::single(2).unwrap()
    }

    fn plus() -> PureState {
        PureState::from_real(qubit(), &[1.0, 1.0]).unwrap()
    }

    #[test]
    fn diagonal_states_are_incoherent() {
        let rho = DensityMatrix::new(qubit(), ComplexMatrix::from_real_diagonal(&[0.3, 0.7])).unwrap();
        assert_eq!(l1_coherence(&rho), 0.0);
    }

    #[test]
    fn plus_state_has_unit_coherence() {
        assert_abs_diff_eq!(l1_coherence(&plus().density()), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(l1_coherence_pure(&plus()), 1.0, epsilon = 1e-15);
        let half = plus().with_weight(0.5).unwrap();
        assert_abs_diff_eq!(l1_coherence_pure(&half), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn maximally_coherent_qutrit() {
        let psi = PureState::from_real(BipartiteShape::single(3).unwrap(), &[1.0, 1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(l1_coherence(&psi.density()), 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(l1_coherence_pure(&psi), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn identical_components() {
        let rho = plus().density();
        let r = triangle_check_l1(&rho, &rho, 0.3).unwrap();
        assert_abs_diff_eq!(r.lower, 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(r.middle, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.upper.unwrap(), 1.0, epsilon = 1e-15);
        assert!(r.pass);
    }

    #[test]
    fn diagonal_plus_plus_state() {
        let diag = DensityMatrix::new(qubit(), ComplexMatrix::from_real_diagonal(&[0.2, 0.8])).unwrap();
        let r = triangle_check_l1(&diag, &plus().density(), 0.5).unwrap();
        assert_abs_diff_eq!(r.lower, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r.middle, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r.upper.unwrap(), 0.5, epsilon = 1e-15);
        assert!(r.pass);
    }

    #[test]
    fn triangle_l1_errors() {
        let a = plus().density();
        let b = DensityMatrix::maximally_mixed(BipartiteShape::single(3).unwrap());
        assert!(matches!(triangle_check_l1(&a, &b, 0.5), Err(Error::ShapeMismatch(_))));
        assert!(triangle_check_l1(&a, &a, 1.0).is_err());
    }

    #[test]
    fn incoherent_mixture_has_zero_roof() {
        let e =
            Rank2Ensemble::from_weight(0.4, PureState::basis(qubit(), 0, 0), PureState::basis(qubit(), 1, 0)).unwrap();
        assert_eq!(convex_roof_l1_estimate(&e, 10_000, 1).unwrap(), 0.0);
    }

    #[test]
    fn roof_chain_incoherent_plus_plus_state() {
        let e = Rank2Ensemble::from_weight(0.5, PureState::basis(qubit(), 0, 0), plus()).unwrap();
        let r = triangle_check_convex_roof_l1(&e, 500, 4).unwrap();
        assert_abs_diff_eq!(r.lower, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r.upper.unwrap(), 0.5, epsilon = 1e-15);
        assert!(r.pass);
    }

    #[test]
    fn roof_at_one_sample_is_given_decomposition() {
        let e = Rank2Ensemble::from_weight(0.3, plus(), PureState::basis(qubit(), 0, 0)).unwrap();
        let search = convex_roof_l1_search(&e, 1, 0).unwrap();
        assert_eq!(search.sampled_averages.len(), 1);
        assert_abs_diff_eq!(search.estimate, 0.3, epsilon = 1e-15);
    }

    #[test]
    fn roof_is_nonincreasing_in_samples() {
        let psi = PureState::normalized(qubit(), vec![Complex64::new(0.6, 0.2), Complex64::new(0.1, -0.7)]).unwrap();
        let e = Rank2Ensemble::from_weight(0.35, psi, plus()).unwrap();
        let mut prev = f64::INFINITY;
        for n in [1, 5, 50, 500] {
            let est = convex_roof_l1_estimate(&e, n, 11).unwrap();
            assert!(est <= prev);
            prev = est;
        }
        let search = convex_roof_l1_search(&e, 500, 11).unwrap();
        assert!(search.l1_of_density <= search.estimate + 1e-9);
    }

    #[test]
    fn rotated_basis() {
        // Hadamard maps |+⟩ to |0⟩
        let h = ComplexMatrix::from_row_major(2, 2, vec![ONE, ONE, ONE, -ONE])
            .unwrap()
            .scale_real(0.5f64.sqrt());
        let basis = CoherenceBasis::rotated(h).unwrap();
        assert_abs_diff_eq!(basis.l1_coherence(&plus().density()).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(basis.l1_coherence_pure(&plus()).unwrap(), 0.0, epsilon = 1e-15);
        let not_unitary = ComplexMatrix::from_real_diagonal(&[1.0, 2.0]);
        assert!(matches!(
            CoherenceBasis::rotated(not_unitary),
            Err(Error::NotUnitary { .. })
        ));
        let comp = CoherenceBasis::computational(2).unwrap();
        assert_abs_diff_eq!(comp.l1_coherence(&plus().density()).unwrap(), 1.0, epsilon = 1e-15);
        assert!(comp
            .l1_coherence(&DensityMatrix::maximally_mixed(BipartiteShape::single(3).unwrap()))
            .is_err());
    }
}
