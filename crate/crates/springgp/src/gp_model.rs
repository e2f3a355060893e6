//! The geometric program for minimum spring mass.
//!
//! Design variables are `x1 = D` (mean coil diameter) and `x2 = d` (wire
//! diameter), both in metres. For a chosen spring index `k > 1` the program
//! is
//!
//! ```text
//! minimize    f  = c x1 x2^2                      (mass, kg)
//! subject to  g1 = c11 x1 x2^-3 + c12 x2^-2 - 1   <= 0   (shear stress)
//!             g2 = c21 x1^3 x2^-(n+3) - 1         <= 0   (tip deflection)
//!             g3 = k x2 - x1                      <= 0   (spring index)
//! ```
//!
//! with posynomial coefficients built from the physical data:
//!
//! ```text
//! c   = pi^2 rho N / 4
//! c11 = 2 (n+3) P / (pi tau_max)
//! c12 = 4 P / (pi tau_max)
//! c21 = (n+3) 2^n P N / (G delta_max)
//! ```
//!
//! All four are strictly positive for any valid input. `g1 + 1` is exactly
//! the stress utilization `tau/tau_max` and `g2 + 1` the deflection
//! utilization `delta/delta_max`, so feasibility here coincides with the
//! physical limits in [`crate::mechanics`].

use crate::mechanics::{LoadCase, MaterialSpec, ValidationError};
use crate::numeric::pow_pos;

/// The four posynomial coefficients of the program, plus the power index `n`
/// carried along because it fixes the `x2` exponent in `g2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GPCoefficients {
    /// Objective coefficient, kg/m^3: `f = c x1 x2^2`.
    pub c: f64,
    /// Stress-constraint torsion coefficient, m^2.
    pub c11: f64,
    /// Stress-constraint direct-shear coefficient, m^2.
    pub c12: f64,
    /// Deflection-constraint coefficient, m^n.
    pub c21: f64,
    /// Power-law index of the material.
    pub n: f64,
}

/// A candidate design point `(x1, x2) = (D, d)` in metres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignVariables {
    pub x1: f64,
    pub x2: f64,
}

impl DesignVariables {
    pub fn new(x1: f64, x2: f64) -> Result<Self, ValidationError> {
        let mut v = Vec::new();
        if !(x1 > 0.0) {
            v.push(format!("x1 must be > 0 (got {x1})"));
        }
        if !(x2 > 0.0) {
            v.push(format!("x2 must be > 0 (got {x2})"));
        }
        ValidationError::check(v)?;
        Ok(DesignVariables { x1, x2 })
    }
}

/// Signed constraint residuals at a design point. Feasible means all three
/// are non-positive. `g1` and `g2` are dimensionless; `g3` carries metres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintResiduals {
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
}

/// Build the program coefficients from material, turn count, and load data.
pub fn build_coefficients(
    material: &MaterialSpec,
    turns: f64,
    load: &LoadCase,
) -> Result<GPCoefficients, ValidationError> {
    let mut violations = Vec::new();
    if let Err(e) = material.validate() {
        violations.extend(e.violations);
    }
    if let Err(e) = load.validate() {
        violations.extend(e.violations);
    }
    if !(turns >= 1.0) {
        violations.push(format!("turn count N must be >= 1 (got {turns})"));
    }
    ValidationError::check(violations)?;

    let pi = std::f64::consts::PI;
    let n = material.power_index;
    let p = load.axial_load;
    let g = material.shear_modulus();
    Ok(GPCoefficients {
        c: pi * pi * material.density * turns / 4.0,
        c11: 2.0 * (n + 3.0) * p / (pi * load.allow_stress),
        c12: 4.0 * p / (pi * load.allow_stress),
        c21: (n + 3.0) * pow_pos(2.0, n) * p * turns / (g * load.allow_deflection),
        n,
    })
}

impl GPCoefficients {
    /// Objective value `f = c x1 x2^2` (spring mass, kg).
    pub fn objective(&self, x: &DesignVariables) -> f64 {
        self.c * x.x1 * x.x2 * x.x2
    }

    /// Constraint residuals `(g1, g2, g3)` at `x` for spring index `k`.
    pub fn constraint_residuals(&self, x: &DesignVariables, k: f64) -> ConstraintResiduals {
        let g1 = self.c11 * x.x1 * pow_pos(x.x2, -3.0) + self.c12 * pow_pos(x.x2, -2.0) - 1.0;
        let g2 = self.c21 * x.x1.powi(3) * pow_pos(x.x2, -(self.n + 3.0)) - 1.0;
        let g3 = k * x.x2 - x.x1;
        ConstraintResiduals { g1, g2, g3 }
    }

    /// Whether `x` satisfies all constraints within `tol`. The length-valued
    /// `g3` is normalized by `x1` first so one dimensionless tolerance covers
    /// all three constraints.
    pub fn is_feasible(&self, x: &DesignVariables, k: f64, tol: f64) -> bool {
        let r = self.constraint_residuals(x, k);
        r.g1 <= tol && r.g2 <= tol && r.g3 / x.x1 <= tol
    }
}
