//! Sweep P for the two-qubit example and write the scatter data.
//!
//! cargo run --release --example figure_sweep -- out.csv

use rank2_triangle::cli::figure_data;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "figure_sweep.csv".into());
    let data = figure_data(101, 200, 1).unwrap();
    std::fs::write(&path, data.rows_csv()).unwrap();
    println!(
        "{} rows written to {path}, {} ordering violations",
        data.rows.len(),
        data.violations()
    );
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9}",
        "P", "C(rho)", "min sum", "max diff", "COA"
    );
    for s in data.summary.iter().step_by(10) {
        println!(
            "{:>5.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            s.p, s.c_rho, s.min_sum_c, s.max_diff_c, s.coa_estimate
        );
    }
}
