//! Build the geometric program from physical data and probe a few candidate
//! designs against its constraints.
//!
//! ```bash
//! cargo run -p springgp --example gp_coefficients
//! ```

use springgp::gp_model::{build_coefficients, DesignVariables};
use springgp::mechanics::{LoadCase, MaterialSpec};

fn main() {
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let coeffs = build_coefficients(&material, 10.0, &load).unwrap();

    println!("program: minimize c x1 x2^2");
    println!("  c   = {:.10e}  (kg/m^3)", coeffs.c);
    println!("  c11 = {:.10e}  (m^2)", coeffs.c11);
    println!("  c12 = {:.10e}  (m^2)", coeffs.c12);
    println!("  c21 = {:.10e}  (m^n)", coeffs.c21);

    let k = 10.0;
    println!("\ncandidates at spring index k = {k}:");
    println!(
        "  {:>12} {:>12} {:>12} {:>10} {:>10} {:>10} {:>9}",
        "x1 (m)", "x2 (m)", "mass (kg)", "g1", "g2", "g3/x1", "feasible"
    );
    for (x1, x2) in [
        (0.010249, 0.0010249), // the optimum
        (0.02, 0.002),         // heavier but feasible
        (0.008, 0.0008),       // too thin: stress violated
        (0.002, 0.002),        // violates the index constraint
    ] {
        let x = DesignVariables::new(x1, x2).unwrap();
        let r = coeffs.constraint_residuals(&x, k);
        println!(
            "  {:>12.6} {:>12.6} {:>12.6e} {:>10.3e} {:>10.3e} {:>10.3e} {:>9}",
            x1,
            x2,
            coeffs.objective(&x),
            r.g1,
            r.g2,
            r.g3 / x1,
            coeffs.is_feasible(&x, k, 1e-4),
        );
    }
}
