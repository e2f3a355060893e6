//! Check the closed-form solver against machinery that does not trust it:
//! a term-by-term KKT residual report and a brute-force grid search.
//!
//! ```bash
//! cargo run -p springgp --example independent_verification
//! ```

use springgp::gp_model::build_coefficients;
use springgp::mechanics::{LoadCase, MaterialSpec};
use springgp::primal_solver::solve;
use springgp::verifier::{grid_oracle_seeded, kkt_residuals, SeedMode};

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();
    let k = 10.0;

    let s = solve(&coeffs, k).unwrap();
    let report = kkt_residuals(&coeffs, k, &s);
    println!("closed form at k = {k}: mass = {:.8e} kg", s.objective);
    println!("  stationarity residuals: {:.2e}, {:.2e}", report.stationarity[0], report.stationarity[1]);
    println!(
        "  complementary slackness: {:.2e}, {:.2e}, {:.2e}",
        report.complementary_slackness[0],
        report.complementary_slackness[1],
        report.complementary_slackness[2]
    );
    println!("  max violation: {:.2e}", report.max_violation);

    // A sloppy candidate does not certify.
    let mut sloppy = s;
    sloppy.x.x1 *= 1.01;
    let bad = kkt_residuals(&coeffs, k, &sloppy);
    println!("\n1% perturbation of x1 -> max violation {:.2e}", bad.max_violation);

    // The oracle is seeded from dimensional analysis, so it would find the
    // optimum even if the closed form were wrong.
    let oracle = grid_oracle_seeded(&coeffs, k, 3, SeedMode::DimensionalAnalysis).unwrap();
    println!(
        "\ngrid oracle: best mass {:.8e} kg at (x1, x2) = ({:.6e}, {:.6e})",
        oracle.best_objective, oracle.best_point.x1, oracle.best_point.x2
    );
    println!(
        "  {} evaluations, {:.2}% of grid points feasible",
        oracle.evaluations,
        100.0 * oracle.feasible_fraction
    );
    println!(
        "  oracle excess over closed form: {:.3e} (relative)",
        (oracle.best_objective - s.objective) / s.objective
    );
}
