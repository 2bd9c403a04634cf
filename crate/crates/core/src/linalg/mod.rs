//! Dense complex linear algebra sized for matrices of dimension ≤ 64.

mod eigen;
mod matrix;
mod singular;

pub(crate) use eigen::check_psd;
pub use eigen::{hermitian_eigensystem, psd_sqrt, Eigensystem};
pub use matrix::{inner, norm_sqr, ComplexMatrix, ComplexScalar};
pub(crate) use matrix::{ONE, ZERO};
pub use singular::{singular_pair_2x2, singular_values, symmetric2_svd_gap, SingularPair2};
