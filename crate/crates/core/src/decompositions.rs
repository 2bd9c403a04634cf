//! Alternative two-element decompositions of a rank-2 state.
//!
//! Any pair `(|Ψ1'⟩, |Ψ2'⟩)^T = U (|Ψ1⟩, |Ψ2⟩)^T` built from the
//! subnormalized components with a 2x2 unitary `U` decomposes the same ρ.
//! `U` is parameterized as
//!
//! ```text
//! U = [[ cosθ e^{iγ},   sinθ e^{iφ} ],
//!      [ -sinθ e^{-iφ}, cosθ e^{-iγ} ]]
//! ```
//!
//! which drops only a global phase that no measured quantity depends on.
//!
//! Random draws come from ChaCha8 streams: [`stream_rng`] maps
//! `(seed, stream)` to an independent generator, so a campaign split into
//! partitions reproduces bit-for-bit regardless of thread count.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coherence::l1_coherence_pure;
use crate::concurrence::{pure_concurrence, wootters_concurrence};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{catalog, ensemble_matrix, PureState, Rank2Ensemble};
use crate::tolerances::{DEGENERATE_WEIGHT, MAX_RESAMPLES, UNITARY};

/// Deterministic generator for partition `stream` of a run seeded with `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Angles of a 2x2 mixing unitary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixingUnitary {
    pub theta: f64,
    pub gamma: f64,
    pub phi: f64,
}

impl MixingUnitary {
    pub fn new(theta: f64, gamma: f64, phi: f64) -> Result<Self> {
        let ok = (0.0..=FRAC_PI_2).contains(&theta) && (0.0..TAU).contains(&gamma) && (0.0..TAU).contains(&phi);
        if !ok {
            return Err(Error::Parse {
                context: "mixing unitary".into(),
                message: format!("angles out of range: theta={theta}, gamma={gamma}, phi={phi}"),
            });
        }
        let u = Self { theta, gamma, phi };
        let deviation = u.matrix().unitary_deviation();
        if deviation > UNITARY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(u)
    }

    pub fn identity() -> Self {
        Self {
            theta: 0.0,
            gamma: 0.0,
            phi: 0.0,
        }
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        [
            [Complex64::from_polar(c, self.gamma), Complex64::from_polar(s, self.phi)],
            [
                -Complex64::from_polar(s, -self.phi),
                Complex64::from_polar(c, -self.gamma),
            ],
        ]
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let [[a, b], [c, d]] = self.entries();
        ComplexMatrix::from_row_major(2, 2, vec![a, b, c, d]).expect("2x2")
    }
}

/// Draws `U` from the Haar measure: `sin²θ` uniform on `[0, 1]`, `γ` and `φ`
/// uniform on `[0, 2π)`.
pub fn haar_sample<R: Rng + ?Sized>(rng: &mut R) -> MixingUnitary {
    let u: f64 = rng.random();
    let theta = u.sqrt().asin();
    let gamma = rng.random::<f64>() * TAU;
    let phi = rng.random::<f64>() * TAU;
    MixingUnitary { theta, gamma, phi }
}

/// Applies `U` to the subnormalized pair and renormalizes the results.
///
/// The new weights are `‖Ψ_a'‖²`; a weight below `1e-10`, or outputs that are
/// numerically parallel, are rejected as a degenerate split.
pub fn remix(e: &Rank2Ensemble, u: &MixingUnitary) -> Result<Rank2Ensemble> {
    let shape = e.shape();
    if e.psi2().shape() != shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", shape, e.psi2().shape())));
    }
    let big = [
        e.subnormalized(0).subnormalized_amplitudes(),
        e.subnormalized(1).subnormalized_amplitudes(),
    ];
    let w = u.entries();
    let mixed: Vec<Vec<Complex64>> = (0..2)
        .map(|a| {
            big[0]
                .iter()
                .zip(&big[1])
                .map(|(x, y)| w[a][0] * x + w[a][1] * y)
                .collect()
        })
        .collect();
    let weights: Vec<f64> = mixed.iter().map(|v| crate::linalg::norm_sqr(v)).collect();
    for &weight in &weights {
        if weight < DEGENERATE_WEIGHT {
            return Err(Error::DegenerateDecomposition { weight });
        }
    }
    let total = weights[0] + weights[1];
    let mut mixed = mixed.into_iter();
    let psi1 = PureState::normalized(shape, mixed.next().unwrap())?;
    let psi2 = PureState::normalized(shape, mixed.next().unwrap())?;
    let p1 = weights[0] / total;
    Rank2Ensemble::new(p1, 1.0 - p1, psi1, psi2).map_err(|err| match err {
        Error::InvalidEnsemble(report) if report.check("linear_independence").is_some_and(|c| !c.pass) => {
            Error::DegenerateDecomposition {
                weight: weights[0].min(weights[1]),
            }
        }
        other => other,
    })
}

/// One decomposition together with its weighted component measures.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionSample {
    pub unitary: MixingUnitary,
    pub ensemble: Rank2Ensemble,
    /// `[p1' C(ψ1'), p2' C(ψ2')]`; absent for single-system shapes.
    pub concurrences: Option<[f64; 2]>,
    /// `[p1' C_l1(ψ1'), p2' C_l1(ψ2')]`
    pub l1: [f64; 2],
    pub avg_pure_concurrence: Option<f64>,
    pub avg_pure_l1: f64,
}

impl DecompositionSample {
    pub fn evaluate(unitary: MixingUnitary, ensemble: Rank2Ensemble) -> Result<Self> {
        let concurrences = if ensemble.shape().is_bipartite() {
            Some([
                pure_concurrence(&ensemble.subnormalized(0))?,
                pure_concurrence(&ensemble.subnormalized(1))?,
            ])
        } else {
            None
        };
        let l1 = [
            l1_coherence_pure(&ensemble.subnormalized(0)),
            l1_coherence_pure(&ensemble.subnormalized(1)),
        ];
        Ok(Self {
            unitary,
            ensemble,
            concurrences,
            l1,
            avg_pure_concurrence: concurrences.map(|[a, b]| a + b),
            avg_pure_l1: l1[0] + l1[1],
        })
    }

    pub fn identity(e: &Rank2Ensemble) -> Result<Self> {
        Self::evaluate(MixingUnitary::identity(), e.clone())
    }

    pub fn concurrence_sum(&self) -> Option<f64> {
        self.avg_pure_concurrence
    }

    pub fn concurrence_difference(&self) -> Option<f64> {
        self.concurrences.map(|[a, b]| (a - b).abs())
    }

    /// Entry-wise distance between this decomposition's ρ and `original`.
    pub fn density_deviation(&self, original: &Rank2Ensemble) -> f64 {
        ensemble_matrix(&self.ensemble).max_abs_diff(&ensemble_matrix(original))
    }
}

/// Haar-random remix of `e`, redrawing (up to 100 times) when the split is
/// degenerate.
pub fn random_decomposition<R: Rng + ?Sized>(e: &Rank2Ensemble, rng: &mut R) -> Result<DecompositionSample> {
    let mut last = None;
    for _ in 0..MAX_RESAMPLES {
        let u = haar_sample(rng);
        match remix(e, &u) {
            Ok(ensemble) => return DecompositionSample::evaluate(u, ensemble),
            Err(err @ Error::DegenerateDecomposition { .. }) => last = Some(err),
            Err(err) => return Err(err),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// `count` random decompositions drawn from one stream.
pub fn sample_decompositions<R: Rng + ?Sized>(
    e: &Rank2Ensemble,
    count: usize,
    rng: &mut R,
) -> Result<Vec<DecompositionSample>> {
    (0..count).map(|_| random_decomposition(e, rng)).collect()
}

/// The given decomposition followed by `samples - 1` random ones from stream
/// 0 of `rng_seed`. A longer run extends a shorter one with the same seed.
pub fn sample_with_identity(e: &Rank2Ensemble, samples: usize, rng_seed: u64) -> Result<Vec<DecompositionSample>> {
    let mut rng = stream_rng(rng_seed, 0);
    let mut out = Vec::with_capacity(samples.max(1));
    out.push(DecompositionSample::identity(e)?);
    for _ in 1..samples {
        out.push(random_decomposition(e, &mut rng)?);
    }
    Ok(out)
}

/// One grid point of the two-qubit example sweep.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub p: f64,
    pub c_rho: f64,
    pub samples: Vec<DecompositionSample>,
}

impl SweepPoint {
    /// Running maximum of the decomposition sums after each sample.
    pub fn coa_trace(&self) -> Vec<f64> {
        self.samples
            .iter()
            .filter_map(DecompositionSample::concurrence_sum)
            .scan(f64::NEG_INFINITY, |best, s| {
                *best = best.max(s);
                Some(*best)
            })
            .collect()
    }

    pub fn coa_estimate(&self) -> f64 {
        self.coa_trace().last().copied().unwrap_or(f64::NAN)
    }
}

/// `C(ρ)` at the pure endpoints `P = 0` (ρ = ψ2) and `P = 1` (ρ = ψ1).
pub fn example_endpoint(p: f64) -> Result<f64> {
    if p == 0.0 {
        pure_concurrence(&catalog::example_psi2())
    } else if p == 1.0 {
        pure_concurrence(&catalog::example_psi1())
    } else {
        Err(Error::InvalidWeight(p))
    }
}

/// For each `P` in the open interval builds `P|ψ1⟩⟨ψ1| + (1-P)|ψ2⟩⟨ψ2|`,
/// evaluates `C(ρ)` through the spin-flip spectrum, and draws
/// `decomps_per_p` Haar remixes from stream `index` of `rng_seed`.
pub fn sweep_example(p_grid: &[f64], decomps_per_p: usize, rng_seed: u64) -> Result<Vec<SweepPoint>> {
    p_grid
        .par_iter()
        .enumerate()
        .map(|(idx, &p)| {
            let e = catalog::example_ensemble(p)?;
            let c_rho = wootters_concurrence(&e.density()?)?;
            let mut rng = stream_rng(rng_seed, idx as u64);
            let samples = sample_decompositions(&e, decomps_per_p, &mut rng)?;
            Ok(SweepPoint { p, c_rho, samples })
        })
        .collect()
}

/// `n` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}
