//! Solve the program at a chosen spring index: closed-form design point,
//! KKT multipliers, and the active constraint set.
//!
//! ```bash
//! cargo run -p springgp --example solve_minimum_mass
//! ```

use springgp::gp_model::build_coefficients;
use springgp::mechanics::{LoadCase, MaterialSpec};
use springgp::primal_solver::{admissible_interval, solve};

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();
    let k_star = admissible_interval(&coeffs).unwrap().k_star;

    // Inside the interval the stress constraint binds; past the root only
    // the deflection-active design remains feasible.
    for k in [10.0, k_star, 40.0] {
        let s = solve(&coeffs, k).unwrap();
        let r = coeffs.constraint_residuals(&s.x, k);
        println!("k = {k:.4} [{}]", s.active_case);
        println!("  D = x1 = {:.6e} m,  d = x2 = {:.6e} m", s.x.x1, s.x.x2);
        println!("  mass    = {:.6e} kg", s.objective);
        println!(
            "  lambdas = ({:.3e}, {:.3e}, {:.3e})",
            s.lambda1, s.lambda2, s.lambda3
        );
        println!(
            "  residuals: g1 = {:.2e}, g2 = {:.2e}, g3/x1 = {:.2e}\n",
            r.g1,
            r.g2,
            r.g3 / s.x.x1
        );
    }

    println!("mass grows with k, so pick the smallest index the coil can tolerate");
}
