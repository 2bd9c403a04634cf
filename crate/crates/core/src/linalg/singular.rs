use serde::Serialize;

use super::eigen::hermitian_eigensystem;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerances::{INEQUALITY_SLACK, SYMMETRIC_2X2};

/// Singular values of a 2x2 matrix, largest first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingularPair2 {
    pub sigma1: f64,
    pub sigma2: f64,
}

impl SingularPair2 {
    pub fn gap(&self) -> f64 {
        self.sigma1 - self.sigma2
    }
}

/// Singular values as square roots of the eigenvalues of `m^dagger m`, sorted
/// descending.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = &m.adjoint() * m;
    match hermitian_eigensystem(&gram) {
        Ok(eig) => eig.values.into_iter().map(|mu| mu.max(0.0).sqrt()).collect(),
        // m^dagger m is Hermitian by construction; only non-finite input gets here
        Err(_) => vec![f64::NAN; m.cols()],
    }
}

/// Closed-form singular values of a 2x2 matrix.
///
/// With `s = σ1 + σ2 = sqrt(‖t‖_F² + 2|det t|)` and
/// `σ1² - σ2² = sqrt((a - b)² + 4|c|²)` taken from `t^dagger t = [[a, c], [c*, b]]`,
/// both the sum and the gap are free of catastrophic cancellation.
pub fn singular_pair_2x2(t: &ComplexMatrix) -> SingularPair2 {
    assert!(t.rows() == 2 && t.cols() == 2, "expected a 2x2 matrix");
    let (t00, t01, t10, t11) = (t[(0, 0)], t[(0, 1)], t[(1, 0)], t[(1, 1)]);
    let a = t00.norm_sqr() + t10.norm_sqr();
    let b = t01.norm_sqr() + t11.norm_sqr();
    let c = t00.conj() * t01 + t10.conj() * t11;
    let det = (t00 * t11 - t01 * t10).norm();
    let sum = (a + b + 2.0 * det).sqrt();
    if sum == 0.0 {
        return SingularPair2 {
            sigma1: 0.0,
            sigma2: 0.0,
        };
    }
    let split = (a - b).hypot(2.0 * c.norm());
    let gap = (split / sum).min(sum);
    SingularPair2 {
        sigma1: 0.5 * (sum + gap),
        sigma2: (0.5 * (sum - gap)).max(0.0),
    }
}

/// Diagonal-modulus gap `| |t00| - |t11| |` of a 2x2 complex symmetric matrix
/// together with its singular values.
///
/// The gap never exceeds `σ1 - σ2`; a violation beyond the inequality slack is
/// reported as [`Error::LemmaViolation`] since it can only come from a
/// numerical defect.
pub fn symmetric2_svd_gap(t: &ComplexMatrix) -> Result<(f64, SingularPair2)> {
    if t.rows() != 2 || t.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: t.rows() * t.cols(),
        });
    }
    let deviation = (t[(0, 1)] - t[(1, 0)]).norm();
    if deviation > SYMMETRIC_2X2 {
        return Err(Error::NotSymmetric { deviation });
    }
    let gap = (t[(0, 0)].norm() - t[(1, 1)].norm()).abs();
    let pair = singular_pair_2x2(t);
    if gap > pair.gap() + INEQUALITY_SLACK {
        return Err(Error::LemmaViolation {
            gap,
            sigma1: pair.sigma1,
            sigma2: pair.sigma2,
        });
    }
    Ok((gap, pair))
}
