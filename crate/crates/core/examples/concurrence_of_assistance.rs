//! Running maximum of the decomposition-averaged concurrence.

use rank2_triangle::concurrence::{coa_estimate, rank2_concurrence_2qubit};
use rank2_triangle::states::catalog;
use rank2_triangle::Rank2Ensemble;

fn main() {
    let bell_mix = Rank2Ensemble::from_weight(0.5, catalog::phi_plus(), catalog::phi_minus()).unwrap();
    let example = catalog::example_ensemble(0.5).unwrap();
    for (label, e) in [("equal Bell mixture", &bell_mix), ("example at P = 1/2", &example)] {
        println!("{label}: C(rho) = {:.6}", rank2_concurrence_2qubit(e).unwrap());
        for n in [1, 10, 100, 1000, 10_000] {
            println!("  {n:>6} samples: COA >= {:.6}", coa_estimate(e, n, 4).unwrap());
        }
    }
}
