//! The two-qubit concurrence of a rank-2 state two ways: the singular-value
//! gap of the 2x2 matrix τ, and the spin-flip spectrum of ρ.

use rank2_triangle::concurrence::{rank2_concurrence_2qubit, tau_2qubit, wootters_concurrence, wootters_lambdas};
use rank2_triangle::states::catalog;

fn main() {
    println!("{:>5} {:>18} {:>18} {:>10}", "P", "tau gap", "spin flip", "|diff|");
    for k in 0..=10 {
        let p = 0.05 + 0.09 * k as f64;
        let e = catalog::example_ensemble(p).unwrap();
        let via_tau = rank2_concurrence_2qubit(&e).unwrap();
        let via_flip = wootters_concurrence(&e.density().unwrap()).unwrap();
        println!(
            "{p:>5.2} {via_tau:>18.15} {via_flip:>18.15} {:>10.2e}",
            (via_tau - via_flip).abs()
        );
    }

    let e = catalog::example_ensemble(0.5).unwrap();
    let tau = tau_2qubit(&e).unwrap();
    println!("\ntau at P = 1/2:\n{:?}", tau.entries);
    println!("lambdas: {:?}", wootters_lambdas(&e.density().unwrap()).unwrap());
    println!("closed form sqrt(7)/4 = {:.15}", 7f64.sqrt() / 4.0);
}
