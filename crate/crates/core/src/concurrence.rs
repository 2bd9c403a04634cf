//! Entanglement concurrence.
//!
//! Pure states use the generator expansion
//! `C² = 4 Σ_{i<j} Σ_{k<l} |φ_ik φ_jl - φ_il φ_jk|²`, cross-checked against
//! the reduced-purity form `2(1 - Tr ρ_A²)`. Mixed two-qubit states use the
//! spin-flip spectrum, and rank-2 ensembles use the singular-value gap of
//! the 2x2 complex symmetric τ matrix. For `d1 ⊗ d2` the generator-resolved
//! τ matrices give `sqrt(Σ C_mn²)`, a lower bound on `C(ρ)`.
//!
//! A subnormalized component `√p |ψ⟩` has concurrence `p · C(ψ)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::decompositions::{sample_with_identity, DecompositionSample};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, inner, symmetric2_svd_gap, ComplexMatrix, SingularPair2};
use crate::states::{sigma_y_sigma_y, spin_flip_matrix, BipartiteShape, DensityMatrix, PureState, Rank2Ensemble};
use crate::tolerances::{FORMULA_AGREEMENT, SUPPORT_CUTOFF, TAU_SYMMETRY};

pub use crate::report::InequalityReport;

/// `C²` of a normalized pure state computed both ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SquaredConcurrenceForms {
    /// `2(1 - Tr ρ_A²)`
    pub purity: f64,
    /// `4 Σ |φ_ik φ_jl - φ_il φ_jk|²`
    pub generator: f64,
}

/// Both squared-concurrence formulas for the normalized amplitudes of `psi`.
pub fn squared_concurrence_forms(psi: &PureState) -> Result<SquaredConcurrenceForms> {
    let shape = psi.shape();
    shape.require_bipartite()?;
    let (d1, d2) = (shape.d1(), shape.d2());
    let phi = |i: usize, j: usize| psi.amplitude(i, j);

    let mut generator = 0.0;
    for i in 0..d1 {
        for j in (i + 1)..d1 {
            for k in 0..d2 {
                for l in (k + 1)..d2 {
                    generator += (phi(i, k) * phi(j, l) - phi(i, l) * phi(j, k)).norm_sqr();
                }
            }
        }
    }
    generator *= 4.0;

    // ρ_A = Φ Φ^dagger with Φ the d1 x d2 amplitude matrix
    let mut purity_sum = 0.0;
    for i in 0..d1 {
        for k in 0..d1 {
            let rik: Complex64 = (0..d2).map(|j| phi(i, j) * phi(k, j).conj()).sum();
            purity_sum += rik.norm_sqr();
        }
    }
    Ok(SquaredConcurrenceForms {
        purity: 2.0 * (1.0 - purity_sum),
        generator,
    })
}

/// Concurrence of `√p |ψ⟩`, i.e. `p · C(ψ)`.
///
/// The two squared forms must agree to `1e-9`. The returned magnitude comes
/// from the generator sum, which has no cancellation near product states.
pub fn pure_concurrence(psi: &PureState) -> Result<f64> {
    let forms = squared_concurrence_forms(psi)?;
    if (forms.purity - forms.generator).abs() > FORMULA_AGREEMENT {
        return Err(Error::FormulaMismatch {
            purity_form: forms.purity.max(0.0).sqrt(),
            generator_form: forms.generator.sqrt(),
        });
    }
    Ok(psi.weight() * forms.generator.sqrt())
}

/// `sqrt(2(d - 1)/d)` with `d = min(d1, d2)`: the largest pure-state concurrence.
pub fn max_concurrence(shape: BipartiteShape) -> f64 {
    let d = shape.d1().min(shape.d2()) as f64;
    (2.0 * (d - 1.0) / d).sqrt()
}

/// The square roots `λ1 ≥ … ≥ λ4` of the eigenvalues of `ρ ρ̃`.
///
/// Computed as the spectrum of the Hermitian `√ρ ρ̃ √ρ` restricted to the
/// support of ρ: with `ρ = V Λ V^dagger`, the nonzero eigenvalues are those of
/// `Λ^½ (V^dagger ρ̃ V) Λ^½` over the eigenvalues above `SUPPORT_CUTOFF`.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    rho.shape().require_two_qubit()?;
    let eig = hermitian_eigensystem(rho.matrix())?;
    crate::linalg::check_psd(&eig.values)?;
    let support: Vec<usize> = (0..4).filter(|&k| eig.values[k] > SUPPORT_CUTOFF).collect();
    let flipped = spin_flip_matrix(rho.matrix());
    let v = &eig.vectors;
    let k = support.len();
    let block = ComplexMatrix::from_fn(k, k, |a, b| {
        let (ia, ib) = (support[a], support[b]);
        let va = v.column(ia);
        let vb = flipped.mul_vec(&v.column(ib));
        inner(&va, &vb) * (eig.values[ia] * eig.values[ib]).sqrt()
    });
    let mut lambdas = [0.0; 4];
    if k > 0 {
        let mu = hermitian_eigensystem(&block)?.values;
        for (slot, m) in lambdas.iter_mut().zip(mu) {
            *slot = m.max(0.0).sqrt();
        }
    }
    Ok(lambdas)
}

/// Eigenvalues of `R = sqrt(√ρ ρ̃ √ρ)` taken literally, for cross-checking
/// [`wootters_lambdas`].
pub fn wootters_lambdas_via_root(rho: &DensityMatrix) -> Result<[f64; 4]> {
    rho.shape().require_two_qubit()?;
    let root = crate::linalg::psd_sqrt(rho.matrix())?;
    let flipped = spin_flip_matrix(rho.matrix());
    let inner_m = &(&root * &flipped) * &root;
    let r = crate::linalg::psd_sqrt(&inner_m)?;
    let values = hermitian_eigensystem(&r)?.values;
    Ok([values[0], values[1], values[2], values[3]])
}

/// `C(ρ) = max{0, λ1 - λ2 - λ3 - λ4}` for two-qubit states.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    let l = wootters_lambdas(rho)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Index pair `(i, j)` with `i < j` naming `L = |i⟩⟨j| - |j⟩⟨i|`, one for
/// each subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneratorPair {
    pub m_index: (usize, usize),
    pub n_index: (usize, usize),
}

impl GeneratorPair {
    pub fn new(m_index: (usize, usize), n_index: (usize, usize)) -> Result<Self> {
        for (i, j) in [m_index, n_index] {
            if i >= j {
                return Err(Error::IndexOutOfRange { i, j, dim: j });
            }
        }
        Ok(Self { m_index, n_index })
    }

    fn check(&self, shape: BipartiteShape) -> Result<()> {
        let (i, j) = self.m_index;
        if j >= shape.d1() {
            return Err(Error::IndexOutOfRange { i, j, dim: shape.d1() });
        }
        let (k, l) = self.n_index;
        if l >= shape.d2() {
            return Err(Error::IndexOutOfRange {
                i: k,
                j: l,
                dim: shape.d2(),
            });
        }
        Ok(())
    }
}

/// All `D1 · D2` generator pairs in lexicographic order, with
/// `D = d(d - 1)/2` per subsystem.
pub fn generator_pairs(shape: BipartiteShape) -> Vec<GeneratorPair> {
    let pairs = |d: usize| -> Vec<(usize, usize)> { (0..d).flat_map(|i| ((i + 1)..d).map(move |j| (i, j))).collect() };
    let (ms, ns) = (pairs(shape.d1()), pairs(shape.d2()));
    ms.iter()
        .flat_map(|&m| ns.iter().map(move |&n| GeneratorPair { m_index: m, n_index: n }))
        .collect()
}

/// A 2x2 complex symmetric matrix of overlaps between the subnormalized
/// ensemble components.
#[derive(Debug, Clone, PartialEq)]
pub struct TauMatrix {
    pub entries: ComplexMatrix,
    pub generator: Option<GeneratorPair>,
}

impl TauMatrix {
    fn from_entries(
        t11: Complex64,
        t12: Complex64,
        t21: Complex64,
        t22: Complex64,
        generator: Option<GeneratorPair>,
    ) -> Result<Self> {
        let deviation = (t12 - t21).norm();
        if deviation > TAU_SYMMETRY {
            return Err(Error::NotSymmetric { deviation });
        }
        let off = (t12 + t21) * 0.5;
        let entries = ComplexMatrix::from_row_major(2, 2, vec![t11, off, off, t22])?;
        Ok(Self { entries, generator })
    }

    pub fn diagonal_moduli(&self) -> [f64; 2] {
        [self.entries[(0, 0)].norm(), self.entries[(1, 1)].norm()]
    }

    /// `(| |τ11| - |τ22| |, singular values)`
    pub fn gap(&self) -> Result<(f64, SingularPair2)> {
        symmetric2_svd_gap(&self.entries)
    }
}

/// `τ_ab = ⟨Ψ_a| σy⊗σy |Ψ_b*⟩` with `|Ψ_a⟩ = √p_a |ψ_a⟩`.
pub fn tau_2qubit(e: &Rank2Ensemble) -> Result<TauMatrix> {
    e.shape().require_two_qubit()?;
    let yy = sigma_y_sigma_y();
    let psi = [
        e.subnormalized(0).subnormalized_amplitudes(),
        e.subnormalized(1).subnormalized_amplitudes(),
    ];
    let tilde: Vec<Vec<Complex64>> = psi
        .iter()
        .map(|v| yy.mul_vec(&v.iter().map(Complex64::conj).collect::<Vec<_>>()))
        .collect();
    let t = |a: usize, b: usize| inner(&psi[a], &tilde[b]);
    TauMatrix::from_entries(t(0, 0), t(0, 1), t(1, 0), t(1, 1), None)
}

/// `C(ρ) = λ1 - λ2` from the singular values of [`tau_2qubit`].
pub fn rank2_concurrence_2qubit(e: &Rank2Ensemble) -> Result<f64> {
    let (_, pair) = tau_2qubit(e)?.gap()?;
    Ok(pair.gap())
}

/// `τ^{mn}_ab = ⟨Ψ_a| L_m ⊗ L_n |Ψ_b*⟩`.
pub fn tau_mn(e: &Rank2Ensemble, g: GeneratorPair) -> Result<TauMatrix> {
    let shape = e.shape();
    shape.require_bipartite()?;
    g.check(shape)?;
    let psi = [
        e.subnormalized(0).subnormalized_amplitudes(),
        e.subnormalized(1).subnormalized_amplitudes(),
    ];
    let (i, j) = g.m_index;
    let (k, l) = g.n_index;
    let at = |v: &[Complex64], x: usize, y: usize| v[shape.index(x, y)];
    // (L_m ⊗ L_n) = |ik⟩⟨jl| - |il⟩⟨jk| - |jk⟩⟨il| + |jl⟩⟨ik|
    let t = |a: usize, b: usize| {
        let (u, w) = (&psi[a], &psi[b]);
        (at(u, i, k) * at(w, j, l) - at(u, i, l) * at(w, j, k) - at(u, j, k) * at(w, i, l) + at(u, j, l) * at(w, i, k))
            .conj()
    };
    TauMatrix::from_entries(t(0, 0), t(0, 1), t(1, 0), t(1, 1), Some(g))
}

/// Per-generator singular-value gaps `C_mn = λ1^mn - λ2^mn`.
pub fn generator_gaps(e: &Rank2Ensemble) -> Result<Vec<(GeneratorPair, f64)>> {
    generator_pairs(e.shape())
        .into_iter()
        .map(|g| Ok((g, tau_mn(e, g)?.gap()?.1.gap())))
        .collect()
}

/// `sqrt(Σ_mn C_mn²) ≤ C(ρ)`.
pub fn highdim_lower_bound(e: &Rank2Ensemble) -> Result<f64> {
    e.shape().require_bipartite()?;
    Ok(generator_gaps(e)?.iter().map(|(_, c)| c * c).sum::<f64>().sqrt())
}

/// `[C(|Ψ1⟩), C(|Ψ2⟩)] = [p1 C(ψ1), p2 C(ψ2)]`
pub fn component_concurrences(e: &Rank2Ensemble) -> Result<[f64; 2]> {
    Ok([
        pure_concurrence(&e.subnormalized(0))?,
        pure_concurrence(&e.subnormalized(1))?,
    ])
}

/// `|C(Ψ1) - C(Ψ2)| ≤ C(ρ) ≤ C(Ψ1) + C(Ψ2)`.
///
/// For two qubits the middle term is the exact rank-2 concurrence. For larger
/// shapes it is [`highdim_lower_bound`], which the lower side must still
/// respect and which cannot exceed the decomposition average on the upper side.
pub fn triangle_check_concurrence(e: &Rank2Ensemble) -> Result<InequalityReport> {
    let [c1, c2] = component_concurrences(e)?;
    let shape = e.shape();
    let (middle, context) = if shape.is_two_qubit() {
        (
            rank2_concurrence_2qubit(e)?,
            "concurrence 2x2: |C1-C2| <= C(rho) <= C1+C2".to_string(),
        )
    } else {
        (
            highdim_lower_bound(e)?,
            format!("concurrence {shape}: |C1-C2| <= sqrt(sum C_mn^2) <= C1+C2"),
        )
    };
    Ok(InequalityReport::new(context, (c1 - c2).abs(), middle, Some(c1 + c2)))
}

/// Largest decomposition-averaged pure concurrence seen over `samples`
/// decompositions (the original one plus `samples - 1` Haar remixes).
pub fn coa_estimate(e: &Rank2Ensemble, samples: usize, rng_seed: u64) -> Result<f64> {
    let draws = sample_with_identity(e, samples, rng_seed)?;
    Ok(draws
        .iter()
        .filter_map(DecompositionSample::concurrence_sum)
        .fold(0.0, f64::max))
}
