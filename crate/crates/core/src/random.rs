//! Random states and matrices for the verification campaigns.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::ComplexMatrix;
use crate::states::{BipartiteShape, DensityMatrix, PureState, Rank2Ensemble};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniform point in the closed unit disc.
pub fn unit_disc<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r: f64 = rng.random::<f64>().sqrt();
    Complex64::from_polar(r, TAU * rng.random::<f64>())
}

/// `[[a, b], [b, c]]` with `a, b, c` uniform in the unit disc.
pub fn random_symmetric_2x2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let (a, b, c) = (unit_disc(rng), unit_disc(rng), unit_disc(rng));
    ComplexMatrix::from_row_major(2, 2, vec![a, b, b, c]).expect("2x2 data")
}

/// Haar-random pure state (normalized complex Gaussian vector).
pub fn random_pure_state<R: Rng + ?Sized>(shape: BipartiteShape, rng: &mut R) -> PureState {
    loop {
        let v: Vec<Complex64> = (0..shape.dim()).map(|_| gaussian(rng)).collect();
        if let Ok(psi) = PureState::normalized(shape, v) {
            return psi;
        }
    }
}

/// `G G^dagger / Tr(G G^dagger)` for a `dim x rank` Ginibre matrix `G`.
pub fn random_density<R: Rng + ?Sized>(shape: BipartiteShape, rank: usize, rng: &mut R) -> DensityMatrix {
    let n = shape.dim();
    let rank = rank.clamp(1, n);
    loop {
        let g = ComplexMatrix::from_fn(n, rank, |_, _| gaussian(rng));
        let w = &g * &g.adjoint();
        let tr = w.trace().re;
        if tr <= 0.0 {
            continue;
        }
        if let Ok(rho) = DensityMatrix::new(shape, w.scale_real(1.0 / tr)) {
            return rho;
        }
    }
}

/// Ginibre state whose rank is drawn uniformly from `1..=dim`.
pub fn random_mixed_state<R: Rng + ?Sized>(shape: BipartiteShape, rng: &mut R) -> DensityMatrix {
    let rank = rng.random_range(1..=shape.dim());
    random_density(shape, rank, rng)
}

/// Two Haar-random pure states with `p1` uniform in `(0, 1)`.
pub fn random_ensemble<R: Rng + ?Sized>(shape: BipartiteShape, rng: &mut R) -> Rank2Ensemble {
    loop {
        let p1: f64 = rng.random();
        if !(p1 > 0.0 && p1 < 1.0) {
            continue;
        }
        let psi1 = random_pure_state(shape, rng);
        let psi2 = random_pure_state(shape, rng);
        if let Ok(e) = Rank2Ensemble::from_weight(p1, psi1, psi2) {
            return e;
        }
    }
}
