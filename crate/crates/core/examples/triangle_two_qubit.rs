//! |C(Ψ1) - C(Ψ2)| ≤ C(ρ) ≤ C(Ψ1) + C(Ψ2) for two-qubit rank-2 states.

use rank2_triangle::campaigns;
use rank2_triangle::concurrence::triangle_check_concurrence;
use rank2_triangle::states::catalog;

fn main() {
    for p in [0.1, 0.5, 0.9] {
        let r = triangle_check_concurrence(&catalog::example_ensemble(p).unwrap()).unwrap();
        println!(
            "P = {p}: {:.6} <= {:.6} <= {:.6} ({})",
            r.lower,
            r.middle,
            r.upper.unwrap(),
            if r.pass { "holds" } else { "VIOLATED" }
        );
    }

    let bell_mix = rank2_triangle::Rank2Ensemble::from_weight(0.5, catalog::phi_plus(), catalog::phi_minus()).unwrap();
    let r = triangle_check_concurrence(&bell_mix).unwrap();
    println!(
        "equal Bell mixture: lower {:.3}, C(rho) {:.3}, upper {:.3}",
        r.lower,
        r.middle,
        r.upper.unwrap()
    );

    let s = campaigns::triangle_two_qubit(20_000, 3);
    println!("{} over random ensembles, {}", s.name, s.summary_line());
}
