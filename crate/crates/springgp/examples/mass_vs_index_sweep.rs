//! Sweep the spring index across the admissible interval and watch the mass
//! curve: strictly increasing, so minimum mass means minimum index.
//!
//! ```bash
//! cargo run -p springgp --example mass_vs_index_sweep
//! ```

use springgp::gp_model::build_coefficients;
use springgp::mechanics::{LoadCase, MaterialSpec};
use springgp::primal_solver::{admissible_interval, sweep};

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();
    let k_star = admissible_interval(&coeffs).unwrap().k_star;

    let rows = sweep(&coeffs, 2.0, k_star, 16).unwrap();
    println!(
        "{:>10} {:>13} {:>13} {:>13} {:>9}",
        "k", "x1 (m)", "x2 (m)", "mass (kg)", "case"
    );
    for row in &rows {
        println!(
            "{:>10.4} {:>13.6e} {:>13.6e} {:>13.6e} {:>9}",
            row.k, row.x1, row.x2, row.objective, row.active_case
        );
    }

    let first = rows.first().unwrap();
    let last = rows.last().unwrap();
    println!(
        "\nmass spans {:.3e} kg at k = {:.2} to {:.3e} kg at k* = {:.4} ({:.1}x)",
        first.objective,
        first.k,
        last.objective,
        last.k,
        last.objective / first.objective
    );
}
