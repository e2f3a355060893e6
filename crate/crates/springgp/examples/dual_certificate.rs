//! Solve the dual program and use it as an optimality certificate: at the
//! stationary index k* the dual optimum v* matches the primal mass and the
//! recovered design matches the primal design.
//!
//! ```bash
//! cargo run -p springgp --example dual_certificate
//! ```

use springgp::dual_solver::{recover_primal, solve_dual, stationary_multiplier_ratios};
use springgp::gp_model::build_coefficients;
use springgp::mechanics::{LoadCase, MaterialSpec};
use springgp::primal_solver::solve;
use springgp::verifier::duality_gap;

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();

    let dual = solve_dual(&coeffs).unwrap();
    let m = &dual.multipliers;
    println!("stationary index k* = {:.6}", dual.k_star);
    println!("dual optimum v* = {:.10e} kg (ln v* = {:.6})", dual.v_star, dual.ln_v_star);
    println!(
        "multipliers: l01 = {}, l11 = {:.6}, l12 = {:.6}, l21 = {:.4}, l31 = {:.4}",
        m.lambda01, m.lambda11, m.lambda12, m.lambda21, m.lambda31
    );

    // The stationarity ratios are mutually consistent exactly at k*.
    let (r11, r12) = stationary_multiplier_ratios(&coeffs, dual.k_star);
    println!(
        "stationarity consistency 1/r11 + 1/r12 = {:.12} (1 exactly at k*)",
        1.0 / r11 + 1.0 / r12
    );

    let recovered = recover_primal(&coeffs, &dual);
    let primal = solve(&coeffs, dual.k_star).unwrap();
    println!("\nrecovered design: x1 = {:.8e} m, x2 = {:.8e} m", recovered.x1, recovered.x2);
    println!("primal design:    x1 = {:.8e} m, x2 = {:.8e} m", primal.x.x1, primal.x.x2);

    let gap = duality_gap(primal.objective, dual.v_star);
    println!("\nprimal mass {:.10e} kg vs v* {:.10e} kg", primal.objective, dual.v_star);
    println!("relative duality gap: {gap:.3e}");
}
