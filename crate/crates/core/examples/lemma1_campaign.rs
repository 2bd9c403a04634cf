//! Diagonal gap against singular-value gap for random complex symmetric
//! 2x2 matrices.
//!
//! cargo run --release --example lemma1_campaign -- 100000 7

use num_complex::Complex64;
use rank2_triangle::campaigns;
use rank2_triangle::linalg::{singular_pair_2x2, ComplexMatrix};

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);

    let t = ComplexMatrix::from_row_major(
        2,
        2,
        vec![
            Complex64::new(0.9, 0.1),
            Complex64::new(0.2, -0.3),
            Complex64::new(0.2, -0.3),
            Complex64::new(0.1, 0.4),
        ],
    )
    .unwrap();
    let pair = singular_pair_2x2(&t);
    let gap = (t[(0, 0)].norm() - t[(1, 1)].norm()).abs();
    println!(
        "single matrix: | |t11| - |t22| | = {gap:.6} <= s1 - s2 = {:.6}",
        pair.gap()
    );

    let summary = campaigns::lemma1(samples, seed);
    println!("{}: worst margin {:.3e}", summary.name, summary.worst_margin);
    println!("{}", summary.summary_line());
}
