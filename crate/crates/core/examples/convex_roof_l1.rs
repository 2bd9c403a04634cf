//! Sampled convex roof of the l1 norm for a rank-2 qutrit state.

use rank2_triangle::coherence::{convex_roof_l1_search, triangle_check_convex_roof_l1};
use rank2_triangle::{BipartiteShape, PureState, Rank2Ensemble};

fn main() {
    let qutrit = BipartiteShape::single(3).unwrap();
    let a = PureState::from_real(qutrit, &[1.0, 1.0, 1.0]).unwrap();
    let b = PureState::from_real(qutrit, &[1.0, 0.0, -0.5]).unwrap();
    let e = Rank2Ensemble::from_weight(0.4, a, b).unwrap();

    for n in [1, 10, 100, 1000, 10_000] {
        let search = convex_roof_l1_search(&e, n, 9).unwrap();
        println!(
            "{n:>6} decompositions: roof <= {:.6} (C_l1(rho) = {:.6})",
            search.estimate, search.l1_of_density
        );
    }
    let r = triangle_check_convex_roof_l1(&e, 10_000, 9).unwrap();
    println!(
        "{:.6} <= {:.6} <= {:.6} <= {:.6}: {}",
        r.lower,
        r.witness.unwrap(),
        r.middle,
        r.upper.unwrap(),
        if r.pass { "holds" } else { "VIOLATED" }
    );
}
