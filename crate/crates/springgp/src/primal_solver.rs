//! Closed-form KKT solutions of the spring program and the admissible
//! spring-index interval.
//!
//! For a fixed index `k > 1` the index constraint `g3` is always active and
//! the KKT system splits into four multiplier sign patterns. Two are
//! infeasible (no active stress/deflection constraint leads to `x2 = 0`;
//! all three constraints active is an overdetermined system). The two real
//! cases are decided by the sign of the feasibility function
//!
//! ```text
//! g(k) = c21^(2/n) k^(6/n) - c11 k - c12
//! ```
//!
//! - `g(k) < 0` — case 3: stress constraint active,
//!   `x2 = sqrt(c11 k + c12)`, `x1 = k x2`.
//! - `g(k) > 0` — case 4: deflection constraint active,
//!   `x2 = c21^(1/n) k^(3/n)`, `x1 = k x2`.
//! - `g(k) = 0` — both closed forms coincide.
//!
//! `g` has a single positive root `k*`; designs exist for any index in
//! `(1, k*]` with mass strictly increasing in `k`, so the designer picks the
//! smallest index that the application tolerates. The root is found by
//! bracketed bisection on the sign of the log-domain residual
//!
//! ```text
//! h(k) = (2/n) ln c21 + (6/n) ln k - ln(c11 k + c12)
//! ```
//!
//! which has the same sign and the same root as `g` but survives the
//! exponent `6/n` (60 at `n = 0.1`) that makes raw evaluation of `g`
//! overflow or underflow far from the root.

use std::fmt;

use crate::gp_model::{DesignVariables, GPCoefficients};
use crate::numeric::{bisect, exp_log_sum};

/// Case-dispatch tolerance on the log residual `h(k)`; inside it the two
/// closed forms agree and the solution is tagged as the boundary.
pub const BOUNDARY_LOG_TOL: f64 = 1e-9;

/// Relative tolerance on the located root `k*`.
pub const ROOT_REL_TOL: f64 = 1e-12;

/// Upper cap for the root bracket expansion.
const BRACKET_CAP: f64 = 1e6;

/// Which constraint set is active at a returned solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActiveCase {
    /// Stress and index constraints active (`g(k) < 0`).
    Case3,
    /// Deflection and index constraints active (`g(k) > 0`).
    Case4,
    /// `k` sits on the root of `g`; both forms coincide.
    Boundary,
}

impl fmt::Display for ActiveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ActiveCase::Case3 => "Case3",
            ActiveCase::Case4 => "Case4",
            ActiveCase::Boundary => "Boundary",
        };
        f.write_str(s)
    }
}

/// The admissible spring-index interval `(1, k_star]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KInterval {
    /// Positive root of `g(k) = 0`.
    pub k_star: f64,
    /// Exclusive lower bound of the interval; always 1.
    pub lower: f64,
    /// Diagnostic only: root of the even extension of `g` on the negative
    /// axis. Not a usable spring index.
    pub negative_root: Option<f64>,
    /// Set when sampling `g` across `(1, k_star)` finds a sign change where
    /// the single-root assumption says there is none.
    pub multiple_roots_suspected: bool,
}

/// A KKT point of the program at fixed `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimalSolution {
    pub k: f64,
    pub x: DesignVariables,
    /// Multiplier of the stress constraint (zero in case 4).
    pub lambda1: f64,
    /// Multiplier of the deflection constraint (zero in case 3).
    pub lambda2: f64,
    /// Multiplier of the index constraint (always positive).
    pub lambda3: f64,
    /// Spring mass `c x1 x2^2`, kg.
    pub objective: f64,
    pub active_case: ActiveCase,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// `k` must be strictly positive to evaluate `g(k)`.
    NonPositiveIndex { k: f64 },
    /// The solvers require `k > 1`.
    IndexNotAboveOne { k: f64 },
    /// `g(k) > 0` for every `k > 1`: the stress-active closed form is
    /// infeasible at all usable indices. Carries the root found at or
    /// below 1 for diagnosis.
    NoAdmissibleIndex { k_star: f64 },
    /// `g` stayed negative up to the bracket cap; the admissible interval
    /// extends beyond any practical spring index.
    RootSearchCapped { cap: f64 },
    /// A case solver was invoked on the wrong side of the root.
    CaseInapplicable {
        case: ActiveCase,
        k: f64,
        g_log: f64,
    },
    /// Bad sweep range.
    InvalidSweepRange { k_min: f64, k_max: f64, steps: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NonPositiveIndex { k } => {
                write!(f, "spring index must be positive (got {k})")
            }
            SolveError::IndexNotAboveOne { k } => {
                write!(f, "spring index must exceed 1 (got {k})")
            }
            SolveError::NoAdmissibleIndex { k_star } => write!(
                f,
                "no admissible spring index: the root of g(k) is {k_star} <= 1"
            ),
            SolveError::RootSearchCapped { cap } => write!(
                f,
                "g(k) < 0 for all k up to {cap}; admissible interval extends beyond the search cap"
            ),
            SolveError::CaseInapplicable { case, k, g_log } => write!(
                f,
                "{case} closed form inapplicable at k = {k} (log residual {g_log:e})"
            ),
            SolveError::InvalidSweepRange { k_min, k_max, steps } => write!(
                f,
                "invalid sweep range: need 1 < k_min < k_max and steps >= 2 \
                 (got k_min = {k_min}, k_max = {k_max}, steps = {steps})"
            ),
        }
    }
}

impl std::error::Error for SolveError {}

/// Log-domain residual `h(k) = (2/n) ln c21 + (6/n) ln k - ln(c11 k + c12)`.
///
/// Same sign and same roots as `g(k)`; this is the quantity the root finder
/// bisects on and the `g`-curve plot data samples.
pub fn g_log_residual(coeffs: &GPCoefficients, k: f64) -> f64 {
    let n = coeffs.n;
    (2.0 / n) * coeffs.c21.ln() + (6.0 / n) * k.ln() - (coeffs.c11 * k + coeffs.c12).ln()
}

/// The feasibility function `g(k) = c21^(2/n) k^(6/n) - c11 k - c12`.
///
/// Evaluated through logs: when either term leaves the comfortably
/// representable range the raw difference is meaningless, and the returned
/// residual degrades to the difference of the logs, which preserves the sign
/// exactly.
pub fn k_feasibility(coeffs: &GPCoefficients, k: f64) -> Result<f64, SolveError> {
    if !(k > 0.0) {
        return Err(SolveError::NonPositiveIndex { k });
    }
    let n = coeffs.n;
    let log_pow = (2.0 / n) * coeffs.c21.ln() + (6.0 / n) * k.ln();
    let log_lin = (coeffs.c11 * k + coeffs.c12).ln();
    const SAFE_LOG: f64 = 700.0;
    if log_pow.abs() < SAFE_LOG && log_lin.abs() < SAFE_LOG {
        Ok(log_pow.exp() - log_lin.exp())
    } else {
        Ok(log_pow - log_lin)
    }
}

/// Locate the admissible interval `(1, k*]` where the positive root `k*` of
/// `g(k) = 0` is found by bisection in `ln k` to relative tolerance
/// [`ROOT_REL_TOL`].
///
/// Also reports the negative-axis diagnostic root (from the even extension
/// `c21^(2/n) |k|^(6/n)`) and checks the single-root assumption by sampling
/// `g` across the interior of the interval.
pub fn admissible_interval(coeffs: &GPCoefficients) -> Result<KInterval, SolveError> {
    let h_of_t = |t: f64| g_log_residual(coeffs, t.exp());

    let k_lo = 1.0 + 1e-12;
    let h_lo = g_log_residual(coeffs, k_lo);

    if h_lo >= 0.0 {
        // Already deflection-bound at the left edge: the root sits at or
        // below 1. Locate it for the error report.
        let t_neg = (1e-12f64).ln();
        let k_star = if g_log_residual(coeffs, 1e-12) >= 0.0 {
            // Degenerate: g positive everywhere we can see.
            f64::NAN
        } else {
            bisect(t_neg, k_lo.ln(), h_of_t, ROOT_REL_TOL, 200).exp()
        };
        return Err(SolveError::NoAdmissibleIndex { k_star });
    }

    // Expand the bracket upward until the residual turns positive.
    let mut prev = k_lo;
    let mut hi = 2.0;
    loop {
        if g_log_residual(coeffs, hi) > 0.0 {
            break;
        }
        prev = hi;
        hi *= 2.0;
        if hi > BRACKET_CAP {
            return Err(SolveError::RootSearchCapped { cap: BRACKET_CAP });
        }
    }

    let t_star = bisect(prev.ln(), hi.ln(), h_of_t, ROOT_REL_TOL, 200);
    let k_star = t_star.exp();

    // Single-root sanity sweep over the interior of (1, k*).
    let mut suspected = false;
    let t_lo = k_lo.ln();
    for i in 1..64 {
        let t = t_lo + (t_star - t_lo) * i as f64 / 64.0;
        if h_of_t(t) > BOUNDARY_LOG_TOL {
            suspected = true;
            break;
        }
    }

    Ok(KInterval {
        k_star,
        lower: 1.0,
        negative_root: Some(-negative_axis_root(coeffs)),
        multiple_roots_suspected: suspected,
    })
}

/// Root of `m(t) = c21^(2/n) t^(6/n) + c11 t - c12` on `t > 0`; `m` is the
/// even extension of `g` to the negative axis. Strictly increasing from
/// `-c12`, so the root exists and is unique.
fn negative_axis_root(coeffs: &GPCoefficients) -> f64 {
    let n = coeffs.n;
    let m = |t: f64| {
        exp_log_sum(&[(2.0 / n, coeffs.c21), (6.0 / n, t)]) + coeffs.c11 * t - coeffs.c12
    };
    // The root never exceeds c12/c11 (where the linear part alone balances),
    // but when the power term underflows, m there is rounding noise of either
    // sign; nudge the bracket end upward and expand until it is positive.
    let mut t_hi = if coeffs.c11 > 0.0 {
        coeffs.c12 / coeffs.c11 * (1.0 + 1e-9)
    } else {
        // Pure power balance: the root is exp((n ln c12 - 2 ln c21) / 6).
        2.0 * ((n * coeffs.c12.ln() - 2.0 * coeffs.c21.ln()) / 6.0).exp()
    };
    for _ in 0..64 {
        if m(t_hi) >= 0.0 {
            break;
        }
        t_hi *= 2.0;
    }
    bisect(0.0, t_hi, m, t_hi * 1e-14, 200)
}

/// Case-3 closed form (stress and index constraints active). Valid where
/// `g(k) <= 0`.
pub fn solve_case3(coeffs: &GPCoefficients, k: f64) -> Result<PrimalSolution, SolveError> {
    if !(k > 1.0) {
        return Err(SolveError::IndexNotAboveOne { k });
    }
    let g_log = g_log_residual(coeffs, k);
    if g_log > BOUNDARY_LOG_TOL {
        return Err(SolveError::CaseInapplicable {
            case: ActiveCase::Case3,
            k,
            g_log,
        });
    }
    let s = coeffs.c11 * k + coeffs.c12;
    let x2 = s.sqrt();
    let x1 = k * x2;
    let lambda1 = 3.0 * coeffs.c * k * x2.powi(5) / (2.0 * s);
    let lambda3 = (5.0 * coeffs.c11 * k + 2.0 * coeffs.c12) / (2.0 * s) * coeffs.c * x2 * x2;
    let x = DesignVariables { x1, x2 };
    Ok(PrimalSolution {
        k,
        x,
        lambda1,
        lambda2: 0.0,
        lambda3,
        objective: coeffs.objective(&x),
        active_case: ActiveCase::Case3,
    })
}

/// Case-4 closed form (deflection and index constraints active). Valid where
/// `g(k) >= 0`.
pub fn solve_case4(coeffs: &GPCoefficients, k: f64) -> Result<PrimalSolution, SolveError> {
    if !(k > 1.0) {
        return Err(SolveError::IndexNotAboveOne { k });
    }
    let g_log = g_log_residual(coeffs, k);
    if g_log < -BOUNDARY_LOG_TOL {
        return Err(SolveError::CaseInapplicable {
            case: ActiveCase::Case4,
            k,
            g_log,
        });
    }
    let n = coeffs.n;
    // x2 = c21^(1/n) k^(3/n); exponents of order 1/n force log-domain math.
    let x2 = exp_log_sum(&[(1.0 / n, coeffs.c21), (3.0 / n, k)]);
    let x1 = k * x2;
    let lambda2 =
        3.0 * coeffs.c / n * exp_log_sum(&[(n + 3.0, x2), (-1.0, coeffs.c21), (-2.0, k)]);
    let lambda3 = coeffs.c * (1.0 + 9.0 / n) * x2 * x2;
    let x = DesignVariables { x1, x2 };
    Ok(PrimalSolution {
        k,
        x,
        lambda1: 0.0,
        lambda2,
        lambda3,
        objective: coeffs.objective(&x),
        active_case: ActiveCase::Case4,
    })
}

/// Solve at a given index: dispatches on the sign of `g(k)` and tags
/// solutions within [`BOUNDARY_LOG_TOL`] of the root as [`ActiveCase::Boundary`]
/// (the two closed forms coincide there; the case-3 form is returned).
pub fn solve(coeffs: &GPCoefficients, k: f64) -> Result<PrimalSolution, SolveError> {
    if !(k > 1.0) {
        return Err(SolveError::IndexNotAboveOne { k });
    }
    let g_log = g_log_residual(coeffs, k);
    if g_log.abs() <= BOUNDARY_LOG_TOL {
        let mut solution = solve_case3(coeffs, k)?;
        solution.active_case = ActiveCase::Boundary;
        Ok(solution)
    } else if g_log < 0.0 {
        solve_case3(coeffs, k)
    } else {
        solve_case4(coeffs, k)
    }
}

/// One row of a [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub k: f64,
    pub x1: f64,
    pub x2: f64,
    pub objective: f64,
    pub active_case: ActiveCase,
}

/// Solve at `steps` indices spaced uniformly in `ln k` over
/// `[k_min, k_max]`, in ascending order.
pub fn sweep(
    coeffs: &GPCoefficients,
    k_min: f64,
    k_max: f64,
    steps: usize,
) -> Result<Vec<SweepPoint>, SolveError> {
    if !(k_min > 1.0 && k_min < k_max && steps >= 2) {
        return Err(SolveError::InvalidSweepRange { k_min, k_max, steps });
    }
    let t_min = k_min.ln();
    let t_max = k_max.ln();
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let k = if i + 1 == steps {
            k_max
        } else {
            (t_min + (t_max - t_min) * i as f64 / (steps - 1) as f64).exp()
        };
        let s = solve(coeffs, k)?;
        rows.push(SweepPoint {
            k,
            x1: s.x.x1,
            x2: s.x.x2,
            objective: s.objective,
            active_case: s.active_case,
        });
    }
    Ok(rows)
}
