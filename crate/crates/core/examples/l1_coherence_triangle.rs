//! l1-norm coherence of mixtures against the coherence of the parts.

use rank2_triangle::campaigns;
use rank2_triangle::coherence::{l1_coherence, triangle_check_l1};
use rank2_triangle::linalg::ComplexMatrix;
use rank2_triangle::{BipartiteShape, DensityMatrix, PureState};

fn main() {
    let qubit = BipartiteShape::single(2).unwrap();
    let plus = PureState::from_real(qubit, &[1.0, 1.0]).unwrap().density();
    let minus = PureState::from_real(qubit, &[1.0, -1.0]).unwrap().density();
    let diag = DensityMatrix::new(qubit, ComplexMatrix::from_real_diagonal(&[0.2, 0.8])).unwrap();
    println!("C(|+>) = {}, C(diag) = {}", l1_coherence(&plus), l1_coherence(&diag));

    for (label, a, b) in [("|+> and |->", &plus, &minus), ("diag and |+>", &diag, &plus)] {
        for p in [0.25, 0.5] {
            let r = triangle_check_l1(a, b, p).unwrap();
            println!(
                "{label}, p1 = {p}: {:.3} <= {:.3} <= {:.3}",
                r.lower,
                r.middle,
                r.upper.unwrap()
            );
        }
    }

    for d in [2, 3] {
        let s = campaigns::l1_triangle(BipartiteShape::single(d).unwrap(), 50_000, 2);
        println!("{}: {}", s.name, s.summary_line());
    }
}
