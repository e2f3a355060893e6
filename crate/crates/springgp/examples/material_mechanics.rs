//! Mechanics of a power-law spring wire: stress distribution across the
//! cross-section, peak stress, tip deflection, and mass.
//!
//! ```bash
//! cargo run -p springgp --example material_mechanics
//! ```

use springgp::mechanics::{
    max_shear_stress, shear_stress_at_radius, spring_mass, stress_factor, tip_deflection,
    LoadCase, MaterialSpec, SpringGeometry, WireTorsion,
};

fn main() {
    // Stainless steel with a strongly nonlinear hardening law.
    let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
    let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
    let geom = SpringGeometry::new(0.010249, 0.0010249, 10.0).unwrap();

    println!("wire material: K = {:.0} MPa, n = {}, G = {:.1} MPa",
        material.bulk_modulus / 1e6,
        material.power_index,
        material.shear_modulus() / 1e6,
    );
    println!(
        "geometry: D = {:.4} mm, d = {:.4} mm, C = D/d = {:.2}, N = {}",
        geom.coil_diameter * 1e3,
        geom.wire_diameter * 1e3,
        geom.spring_index(),
        geom.turns,
    );

    let torsion = WireTorsion::from_load(&load, &geom, &material);
    println!(
        "\ntorsion state: T = {:.4e} N*m, I_n = {:.4e} m^(n+3), twist rate = {:.4e} rad/m",
        torsion.torque, torsion.area_moment, torsion.twist_rate
    );

    println!("\nshear stress across the wire (r from axis to surface):");
    for i in 0..=5 {
        let r = i as f64 / 5.0 * geom.wire_diameter / 2.0;
        let tau = shear_stress_at_radius(&load, &geom, &material, r).unwrap();
        println!("  r = {:>9.6} mm   tau = {:8.2} MPa", r * 1e3, tau / 1e6);
    }

    let tau_peak = max_shear_stress(&load, &geom, &material);
    println!(
        "\npeak stress {:.2} MPa (K_s = {:.4}) vs allowable {:.0} MPa",
        tau_peak / 1e6,
        stress_factor(geom.spring_index(), material.power_index),
        load.allow_stress / 1e6
    );

    let delta = tip_deflection(&load, &geom, &material);
    println!(
        "tip deflection {:.4} mm vs allowable {:.0} mm",
        delta * 1e3,
        load.allow_deflection * 1e3
    );
    println!("spring mass {:.4} g", spring_mass(&geom, &material) * 1e3);
}
