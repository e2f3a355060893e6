//! Drive the whole pipeline from a config file, the same way the `springgp`
//! binary does: parse, build the program, pick an index, solve, verify.
//!
//! ```bash
//! cargo run -p springgp --example design_from_config
//! ```

use std::path::Path;

use springgp::cli::parse_config;
use springgp::dual_solver::solve_dual;
use springgp::gp_model::build_coefficients;
use springgp::primal_solver::{admissible_interval, solve};
use springgp::verifier::{duality_gap, kkt_residuals};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/stainless_steel.cfg");
    let config = parse_config(&path).unwrap();
    println!("loaded {}", path.display());
    println!(
        "  material: K = {} Pa, n = {}, rho = {} kg/m^3",
        config.material.bulk_modulus, config.material.power_index, config.material.density
    );
    println!(
        "  load: P = {} N, tau_max = {} Pa, delta_max = {} m",
        config.load.axial_load, config.load.allow_stress, config.load.allow_deflection
    );

    let coeffs = build_coefficients(&config.material, config.turns, &config.load).unwrap();
    let interval = admissible_interval(&coeffs).unwrap();
    println!("\nadmissible index interval: (1, {:.4}]", interval.k_star);

    let k = config.k.unwrap_or(config.practical_k_min);
    let s = solve(&coeffs, k).unwrap();
    println!(
        "design at k = {k}: D = {:.6e} m, d = {:.6e} m, mass = {:.6e} kg [{}]",
        s.x.x1, s.x.x2, s.objective, s.active_case
    );

    let report = kkt_residuals(&coeffs, k, &s);
    let dual = solve_dual(&coeffs).unwrap();
    let primal_at_root = solve(&coeffs, dual.k_star).unwrap();
    println!("kkt max violation: {:.2e}", report.max_violation);
    println!(
        "duality gap at k*: {:.2e}",
        duality_gap(primal_at_root.objective, dual.v_star)
    );
}
