//! For d1, d2 > 2 the rank-2 concurrence is bracketed by
//! sqrt(Σ C_mn²) from below and by any decomposition average from above.

use rank2_triangle::campaigns;
use rank2_triangle::concurrence::{component_concurrences, generator_gaps, highdim_lower_bound};
use rank2_triangle::decompositions::{sample_with_identity, stream_rng};
use rank2_triangle::random::random_ensemble;
use rank2_triangle::BipartiteShape;

fn main() {
    let shape = BipartiteShape::new(3, 3).unwrap();
    let e = random_ensemble(shape, &mut stream_rng(11, 0));

    for (g, c) in generator_gaps(&e).unwrap() {
        println!("L{:?} x L{:?}: C_mn = {c:.6}", g.m_index, g.n_index);
    }
    let [c1, c2] = component_concurrences(&e).unwrap();
    let bound = highdim_lower_bound(&e).unwrap();
    let best = sample_with_identity(&e, 1000, 5)
        .unwrap()
        .iter()
        .filter_map(|d| d.avg_pure_concurrence)
        .fold(f64::INFINITY, f64::min);
    println!("|C1 - C2| = {:.6}", (c1 - c2).abs());
    println!("sqrt(sum C_mn^2) = {bound:.6}");
    println!("smallest average over 1000 decompositions = {best:.6}");
    println!("C1 + C2 = {:.6}", c1 + c2);

    let s = campaigns::triangle_highdim(shape, 1000, 100, 1).unwrap();
    println!("{}: {}", s.name, s.summary_line());
}
