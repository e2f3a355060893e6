//! Locate the admissible spring-index interval (1, k*] and trace the
//! feasibility function g(k) whose positive root bounds it.
//!
//! ```bash
//! cargo run -p springgp --example spring_index_interval
//! ```

use springgp::gp_model::build_coefficients;
use springgp::mechanics::{LoadCase, MaterialSpec};
use springgp::primal_solver::{admissible_interval, g_log_residual, k_feasibility};

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();

    let interval = admissible_interval(&coeffs).unwrap();
    println!("admissible interval: (1, {:.6}]", interval.k_star);
    println!(
        "negative-axis diagnostic root: {:.6}",
        interval.negative_root.unwrap()
    );

    // Sign-carrying log residual: negative means the stress-active design
    // is feasible at that index, positive means only the deflection-active
    // design is.
    println!("\n  {:>10}  {:>14}  {:>14}", "k", "g(k)", "log residual");
    let top = 1.2 * interval.k_star;
    for i in 1..=12 {
        let k = (i as f64 / 12.0 * top.ln()).exp();
        let g = k_feasibility(&coeffs, k).unwrap();
        let h = g_log_residual(&coeffs, k);
        println!("  {k:>10.4}  {g:>14.4e}  {h:>14.4}");
    }
    println!(
        "\ng crosses zero at k* = {:.6}; any spring index in (1, k*] admits a design",
        interval.k_star
    );
}
