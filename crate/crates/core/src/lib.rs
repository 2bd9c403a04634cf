//! Coherence and concurrence of rank-2 mixed states, with numerical
//! verification of their triangle inequalities.
//!
//! For `ρ = p1|ψ1⟩⟨ψ1| + p2|ψ2⟩⟨ψ2|` and subnormalized `|Ψa⟩ = √pa|ψa⟩`:
//!
//! ```text
//! |C(Ψ1) - C(Ψ2)| ≤ C(ρ) ≤ C(Ψ1) + C(Ψ2)
//! ```
//!
//! holds for the l1-norm of coherence, its convex roof, and the concurrence.
//!
//! ```
//! use rank2_triangle::states::catalog;
//! use rank2_triangle::concurrence::{rank2_concurrence_2qubit, triangle_check_concurrence};
//!
//! let e = catalog::example_ensemble(0.5).unwrap();
//! let c = rank2_concurrence_2qubit(&e).unwrap();
//! assert!((c - 7f64.sqrt() / 4.0).abs() < 1e-12);
//! assert!(triangle_check_concurrence(&e).unwrap().pass);
//! ```

pub mod campaigns;
pub mod cli;
pub mod coherence;
pub mod concurrence;
pub mod decompositions;
pub mod error;
pub mod linalg;
pub mod random;
pub mod report;
pub mod statefile;
pub mod states;
pub mod tolerances;

pub use error::{Error, Result};
pub use report::InequalityReport;
pub use states::{BipartiteShape, DensityMatrix, PureState, Rank2Ensemble};
