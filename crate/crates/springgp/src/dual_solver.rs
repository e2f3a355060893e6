//! The geometric-programming dual of the spring program.
//!
//! With normality `lambda01 = 1` and the two orthogonality conditions, the
//! free dual variables reduce to `(lambda11, lambda12)` via
//!
//! ```text
//! lambda21 = (3 - 2 lambda11 - 2 lambda12) / n
//! lambda31 = 1 + 9/n + (1 - 6/n) lambda11 - (6/n) lambda12
//! ```
//!
//! and the dual objective is
//!
//! ```text
//! v = c (c11 (l11+l12)/l11)^l11 (c12 (l11+l12)/l12)^l12 c21^l21 k^l31
//! ```
//!
//! Stationarity of `ln v` pins the multiplier ratios
//!
//! ```text
//! (l11+l12)/l11 = c11^-1 c21^(2/n) k^(6/n-1)
//! (l11+l12)/l12 = c12^-1 c21^(2/n) k^(6/n)
//! ```
//!
//! whose mutual consistency is exactly the root condition `g(k) = 0` from
//! the primal side. At the root the dual optimum collapses to
//! `v* = c c21^(3/n) k^(1+9/n)` with recovered primal point
//! `x2 = c21^(1/n) k^(3/n)`, `x1 = k x2` — the same point both primal cases
//! produce, so the duality gap vanishes there.
//!
//! The multipliers themselves are not pinned by stationarity. They only have
//! to satisfy the dual constraints, so for reproducible output `lambda11` is
//! fixed at half its feasibility bound `(3/2) c11 c21^(-2/n) k^(1-6/n)`;
//! any other choice in range yields the same `v*` and the same recovered
//! point.

use std::fmt;

use crate::gp_model::{DesignVariables, GPCoefficients};
use crate::numeric::{exp_log_sum, log_sum};
use crate::primal_solver::{admissible_interval, SolveError};

/// Dual multipliers, one per posynomial term: `lambda01` for the objective,
/// `lambda11`/`lambda12` for the two stress terms, `lambda21` for the
/// deflection term, `lambda31` for the index term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualMultipliers {
    pub lambda01: f64,
    pub lambda11: f64,
    pub lambda12: f64,
    pub lambda21: f64,
    pub lambda31: f64,
}

impl DualMultipliers {
    /// Residuals of the normality and two orthogonality equality
    /// constraints, in order.
    pub fn equality_residuals(&self, n: f64) -> [f64; 3] {
        [
            self.lambda01 - 1.0,
            self.lambda01 + self.lambda11 + 3.0 * self.lambda21 - self.lambda31,
            2.0 * self.lambda01 - 3.0 * self.lambda11 - 2.0 * self.lambda12
                - (n + 3.0) * self.lambda21
                + self.lambda31,
        ]
    }
}

/// Solution of the dual program at the stationary index `k*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualSolution {
    /// The stationary spring index: the positive root of `g`.
    pub k_star: f64,
    /// Dual optimum `v* = c c21^(3/n) k*^(1+9/n)`, kg.
    pub v_star: f64,
    /// `ln v*`; survives parameter regimes where `v_star` itself would
    /// underflow or overflow.
    pub ln_v_star: f64,
    pub multipliers: DualMultipliers,
    /// Primal point recovered from the dual system.
    pub recovered: DesignVariables,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DualError {
    /// Propagated failure to locate `k*`.
    Solve(SolveError),
    /// Multipliers outside the dual feasible set.
    MultiplierBounds(String),
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::Solve(e) => write!(f, "{e}"),
            DualError::MultiplierBounds(msg) => write!(f, "dual multipliers infeasible: {msg}"),
        }
    }
}

impl std::error::Error for DualError {}

impl From<SolveError> for DualError {
    fn from(e: SolveError) -> Self {
        DualError::Solve(e)
    }
}

/// Evaluate the dual objective `v` at free multipliers `(lambda11, lambda12)`
/// with `lambda21`, `lambda31` derived from the orthogonality conditions.
///
/// Computed as `exp` of the accumulated log terms; the `c21^lambda21` factor
/// alone can underflow raw arithmetic at small `n`.
pub fn dual_objective(
    coeffs: &GPCoefficients,
    k: f64,
    lambda11: f64,
    lambda12: f64,
) -> Result<f64, DualError> {
    if !(lambda11 > 0.0) || !(lambda12 > 0.0) {
        return Err(DualError::MultiplierBounds(format!(
            "lambda11 and lambda12 must be positive (got {lambda11}, {lambda12})"
        )));
    }
    let n = coeffs.n;
    let lambda21 = (3.0 - 2.0 * lambda11 - 2.0 * lambda12) / n;
    if lambda21 < 0.0 {
        return Err(DualError::MultiplierBounds(format!(
            "lambda21 = {lambda21} < 0; requires lambda11 + lambda12 <= 3/2"
        )));
    }
    let lambda31 = 1.0 + 9.0 / n + (1.0 - 6.0 / n) * lambda11 - 6.0 / n * lambda12;
    if lambda31 < 0.0 {
        return Err(DualError::MultiplierBounds(format!(
            "lambda31 = {lambda31} < 0"
        )));
    }
    let sum = lambda11 + lambda12;
    let ln_v = coeffs.c.ln()
        + lambda11 * (coeffs.c11.ln() + sum.ln() - lambda11.ln())
        + lambda12 * (coeffs.c12.ln() + sum.ln() - lambda12.ln())
        + lambda21 * coeffs.c21.ln()
        + lambda31 * k.ln();
    Ok(ln_v.exp())
}

/// The stationary multiplier ratios `(l11+l12)/l11` and `(l11+l12)/l12`.
///
/// Their reciprocals sum to 1 exactly when `k` is the root of `g`; away from
/// the root the stationarity system has no positive solution.
pub fn stationary_multiplier_ratios(coeffs: &GPCoefficients, k: f64) -> (f64, f64) {
    let n = coeffs.n;
    let ratio11 = exp_log_sum(&[(-1.0, coeffs.c11), (2.0 / n, coeffs.c21), (6.0 / n - 1.0, k)]);
    let ratio12 = exp_log_sum(&[(-1.0, coeffs.c12), (2.0 / n, coeffs.c21), (6.0 / n, k)]);
    (ratio11, ratio12)
}

/// Solve the dual program: locate `k*`, fix the multipliers, evaluate `v*`,
/// and recover the primal point.
pub fn solve_dual(coeffs: &GPCoefficients) -> Result<DualSolution, SolveError> {
    let interval = admissible_interval(coeffs)?;
    let k_star = interval.k_star;
    let n = coeffs.n;

    // lambda11 at half its bound (3/2) c11 c21^(-2/n) k^(1-6/n); then the
    // stationary ratio forces lambda11 + lambda12 = 3/4.
    let lambda11 = 0.75
        * exp_log_sum(&[
            (1.0, coeffs.c11),
            (-2.0 / n, coeffs.c21),
            (1.0 - 6.0 / n, k_star),
        ]);
    let (ratio11, _) = stationary_multiplier_ratios(coeffs, k_star);
    let lambda12 = (ratio11 - 1.0) * lambda11;
    let lambda21 = (3.0 - 2.0 * lambda11 - 2.0 * lambda12) / n;
    let lambda31 = 1.0 + lambda11 + 3.0 * lambda21;

    let ln_v_star = coeffs.c.ln() + log_sum(&[(3.0 / n, coeffs.c21), (1.0 + 9.0 / n, k_star)]);
    let x2 = exp_log_sum(&[(1.0 / n, coeffs.c21), (3.0 / n, k_star)]);

    Ok(DualSolution {
        k_star,
        v_star: ln_v_star.exp(),
        ln_v_star,
        multipliers: DualMultipliers {
            lambda01: 1.0,
            lambda11,
            lambda12,
            lambda21,
            lambda31,
        },
        recovered: DesignVariables {
            x1: k_star * x2,
            x2,
        },
    })
}

/// Recover the primal design from a dual solution: the closed form
/// `x2 = c21^(1/n) k*^(3/n)`, `x1 = k* x2` that solves the weight-balance
/// system at the stationary multipliers.
pub fn recover_primal(coeffs: &GPCoefficients, dual: &DualSolution) -> DesignVariables {
    let n = coeffs.n;
    let x2 = exp_log_sum(&[(1.0 / n, coeffs.c21), (3.0 / n, dual.k_star)]);
    DesignVariables {
        x1: dual.k_star * x2,
        x2,
    }
}
