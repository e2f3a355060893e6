//! Torsion mechanics of a helical compression spring wound from power-law
//! wire.
//!
//! The wire material follows `sigma = K |eps|^(n-1) eps` in uniaxial loading,
//! with shear handled through the shear modulus `G = K / (1 + nu)`. For a
//! spring of mean coil diameter `D`, wire diameter `d`, and `N` active turns
//! under axial load `P`:
//!
//! - torque on the wire cross-section: `T = P D / 2`
//! - generalized area moment: `I_n = pi d^(n+3) / ((n+3) 2^(n+2))`
//! - shear stress at radius `r`:
//!   `tau(r) = 2^(n+1) (n+3) P D r^n / (pi d^(n+3)) + 4P / (pi d^2)`
//! - maximum shear stress (at `r = d/2`):
//!   `tau_max = (2 (n+3) P D / (pi d^3)) K_s`, `K_s = 1 + 2 / ((n+3) C)`
//! - tip deflection: `delta = (n+3) 2^(n+2) D^3 P N / (4 G d^(n+3))`
//! - mass: `m = (pi d^2 / 4)(pi D) rho N`
//!
//! All of these reduce to the classical Hookean forms at `n = 1`
//! (`I_1 = pi d^4 / 32`, `delta = 8 P D^3 N / (G d^4)`).
//!
//! Everything here is a pure function of its inputs; no shared state.

use std::fmt;

use crate::numeric::pow_pos;

/// Invalid physical input. Collects every violated invariant, not just the
/// first, so a config with three bad fields reports all three at once.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationError {
    pub violations: Vec<String>,
}

impl ValidationError {
    pub(crate) fn check(violations: Vec<String>) -> Result<(), ValidationError> {
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationError { violations })
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid input: {}", self.violations.join("; "))
    }
}

impl std::error::Error for ValidationError {}

/// Power-law (Hollomon) material constants, SI units.
///
/// The shear modulus is always derived as `K / (1 + nu)`; it is never stored,
/// so it cannot go stale if a field changes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialSpec {
    /// Bulk modulus `K` of the power law, Pa.
    pub bulk_modulus: f64,
    /// Power-law index `n` (dimensionless); `n = 1` is Hooke's law.
    pub power_index: f64,
    /// Poisson's ratio `nu` (dimensionless).
    pub poisson_ratio: f64,
    /// Density `rho`, kg/m^3.
    pub density: f64,
}

impl MaterialSpec {
    pub fn new(
        bulk_modulus: f64,
        power_index: f64,
        poisson_ratio: f64,
        density: f64,
    ) -> Result<Self, ValidationError> {
        let spec = MaterialSpec {
            bulk_modulus,
            power_index,
            poisson_ratio,
            density,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut v = Vec::new();
        if !(self.bulk_modulus > 0.0) {
            v.push(format!("bulk modulus K must be > 0 (got {})", self.bulk_modulus));
        }
        if !(self.power_index > 0.0) {
            v.push(format!("power index n must be > 0 (got {})", self.power_index));
        }
        if !(0.0..0.5).contains(&self.poisson_ratio) {
            v.push(format!(
                "Poisson ratio nu must lie in [0, 0.5) (got {})",
                self.poisson_ratio
            ));
        }
        if !(self.density > 0.0) {
            v.push(format!("density rho must be > 0 (got {})", self.density));
        }
        ValidationError::check(v)
    }

    /// Shear modulus `G = K / (1 + nu)`, Pa.
    pub fn shear_modulus(&self) -> f64 {
        self.bulk_modulus / (1.0 + self.poisson_ratio)
    }

    /// Diagnostics worth surfacing but not worth rejecting the input over.
    /// Hollomon metals typically have `n <= 1`; the formulas stay valid above
    /// that, so larger values only produce a warning.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.power_index > 1.0 {
            w.push(format!(
                "power index n = {} exceeds 1; power-law metals typically have n <= 1",
                self.power_index
            ));
        }
        w
    }
}

/// Coil geometry: mean coil diameter `D`, wire diameter `d`, active turns `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringGeometry {
    /// Mean coil diameter `D`, m.
    pub coil_diameter: f64,
    /// Wire diameter `d`, m.
    pub wire_diameter: f64,
    /// Number of active turns `N`. Fractional turn counts are physical.
    pub turns: f64,
}

impl SpringGeometry {
    pub fn new(coil_diameter: f64, wire_diameter: f64, turns: f64) -> Result<Self, ValidationError> {
        let geom = SpringGeometry {
            coil_diameter,
            wire_diameter,
            turns,
        };
        geom.validate()?;
        Ok(geom)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut v = Vec::new();
        if !(self.coil_diameter > 0.0) {
            v.push(format!("coil diameter D must be > 0 (got {})", self.coil_diameter));
        }
        if !(self.wire_diameter > 0.0) {
            v.push(format!("wire diameter d must be > 0 (got {})", self.wire_diameter));
        }
        if !(self.turns >= 1.0) {
            v.push(format!("turn count N must be >= 1 (got {})", self.turns));
        }
        if self.coil_diameter > 0.0
            && self.wire_diameter > 0.0
            && self.spring_index() <= 1.0
        {
            v.push(format!(
                "spring index C = D/d must exceed 1 (got {})",
                self.spring_index()
            ));
        }
        ValidationError::check(v)
    }

    /// Spring index `C = D / d`.
    pub fn spring_index(&self) -> f64 {
        self.coil_diameter / self.wire_diameter
    }
}

/// Service loading and the design limits it must respect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadCase {
    /// Axial load `P`, N.
    pub axial_load: f64,
    /// Allowable shear stress `tau_max`, Pa.
    pub allow_stress: f64,
    /// Allowable tip deflection `delta_max`, m.
    pub allow_deflection: f64,
}

impl LoadCase {
    pub fn new(axial_load: f64, allow_stress: f64, allow_deflection: f64) -> Result<Self, ValidationError> {
        let load = LoadCase {
            axial_load,
            allow_stress,
            allow_deflection,
        };
        load.validate()?;
        Ok(load)
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut v = Vec::new();
        if !(self.axial_load > 0.0) {
            v.push(format!("axial load P must be > 0 (got {})", self.axial_load));
        }
        if !(self.allow_stress > 0.0) {
            v.push(format!(
                "allowable stress tau_max must be > 0 (got {})",
                self.allow_stress
            ));
        }
        if !(self.allow_deflection > 0.0) {
            v.push(format!(
                "allowable deflection delta_max must be > 0 (got {})",
                self.allow_deflection
            ));
        }
        ValidationError::check(v)
    }
}

/// Torsion state of the wire cross-section: torque, generalized area moment,
/// and the rate of twist they induce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WireTorsion {
    /// Torque `T = P D / 2`, N·m.
    pub torque: f64,
    /// Generalized area moment `I_n`, m^(n+3).
    pub area_moment: f64,
    /// Rate of twist `alpha`, rad/m.
    pub twist_rate: f64,
}

impl WireTorsion {
    /// Build the torsion state of the loaded wire.
    pub fn from_load(load: &LoadCase, geom: &SpringGeometry, material: &MaterialSpec) -> Self {
        let torque = load.axial_load * geom.coil_diameter / 2.0;
        let area_moment = generalized_area_moment(geom.wire_diameter, material.power_index);
        let mut torsion = WireTorsion {
            torque,
            area_moment,
            twist_rate: 0.0,
        };
        torsion.twist_rate = rate_of_twist(&torsion, material);
        torsion
    }
}

/// Uniaxial power-law stress `sigma = K |eps|^(n-1) eps`, Pa.
///
/// Odd in the strain: `sigma(-eps) = -sigma(eps)`, and exactly zero at zero
/// strain even for `n < 1` (where the naive `|eps|^(n-1)` blows up).
pub fn uniaxial_stress(strain: f64, material: &MaterialSpec) -> f64 {
    if strain == 0.0 {
        return 0.0;
    }
    let magnitude = material.bulk_modulus * pow_pos(strain.abs(), material.power_index);
    magnitude.copysign(strain)
}

/// Generalized area moment `I_n = pi d^(n+3) / ((n+3) 2^(n+2))`, m^(n+3).
///
/// This is the torsional resistance integral `int r^(n+2) dr dtheta` over the
/// circular cross-section; at `n = 1` it is the polar moment `pi d^4 / 32`.
pub fn generalized_area_moment(wire_diameter: f64, power_index: f64) -> f64 {
    let n = power_index;
    std::f64::consts::PI * pow_pos(wire_diameter, n + 3.0) / ((n + 3.0) * pow_pos(2.0, n + 2.0))
}

/// Total shear stress at radius `r` from the wire axis, Pa: the torsional
/// term `T r^n / I_n` plus the uniform direct-shear term `4P / (pi d^2)`.
///
/// `r` must lie in `[0, d/2]`.
pub fn shear_stress_at_radius(
    load: &LoadCase,
    geom: &SpringGeometry,
    material: &MaterialSpec,
    radius: f64,
) -> Result<f64, ValidationError> {
    let half_d = geom.wire_diameter / 2.0;
    if !(0.0..=1.0).contains(&(radius / half_d)) {
        return Err(ValidationError {
            violations: vec![format!(
                "radius r = {radius} outside the wire cross-section [0, {half_d}]"
            )],
        });
    }
    let n = material.power_index;
    let torsion = WireTorsion::from_load(load, geom, material);
    let torsional = torsion.torque * pow_pos(radius, n) / torsion.area_moment;
    let direct = 4.0 * load.axial_load / (std::f64::consts::PI * geom.wire_diameter.powi(2));
    Ok(torsional + direct)
}

/// Stress-concentration factor `K_s = 1 + 2 / ((n+3) C)` accounting for the
/// direct-shear contribution on top of torsion.
pub fn stress_factor(spring_index: f64, power_index: f64) -> f64 {
    1.0 + 2.0 / ((power_index + 3.0) * spring_index)
}

/// Maximum shear stress in the wire, Pa. Occurs at the outer fiber `r = d/2`:
/// `tau = (2 (n+3) P D / (pi d^3)) K_s`.
pub fn max_shear_stress(load: &LoadCase, geom: &SpringGeometry, material: &MaterialSpec) -> f64 {
    let n = material.power_index;
    let base = 2.0 * (n + 3.0) * load.axial_load * geom.coil_diameter
        / (std::f64::consts::PI * geom.wire_diameter.powi(3));
    base * stress_factor(geom.spring_index(), n)
}

/// Axial tip deflection of the spring, m:
/// `delta = (n+3) 2^(n+2) D^3 P N / (4 G d^(n+3))`.
pub fn tip_deflection(load: &LoadCase, geom: &SpringGeometry, material: &MaterialSpec) -> f64 {
    let n = material.power_index;
    let g = material.shear_modulus();
    (n + 3.0) * pow_pos(2.0, n + 2.0) * geom.coil_diameter.powi(3) * load.axial_load * geom.turns
        / (4.0 * g * pow_pos(geom.wire_diameter, n + 3.0))
}

/// Rate of twist `alpha = 2 (T / (2 G I_n))^(1/n)`, rad/m.
///
/// Substituting back gives `tau(r) = 2G (r alpha / 2)^n = T r^n / I_n`.
pub fn rate_of_twist(torsion: &WireTorsion, material: &MaterialSpec) -> f64 {
    if torsion.torque == 0.0 {
        return 0.0;
    }
    let g = material.shear_modulus();
    2.0 * pow_pos(
        torsion.torque / (2.0 * g * torsion.area_moment),
        1.0 / material.power_index,
    )
}

/// Spring mass `m = (pi d^2 / 4)(pi D) rho N`, kg.
pub fn spring_mass(geom: &SpringGeometry, material: &MaterialSpec) -> f64 {
    let pi = std::f64::consts::PI;
    (pi * geom.wire_diameter.powi(2) / 4.0)
        * (pi * geom.coil_diameter)
        * material.density
        * geom.turns
}
