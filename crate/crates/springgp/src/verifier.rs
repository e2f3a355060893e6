//! Independent numerical verification of solver output.
//!
//! Nothing here trusts the closed forms: [`kkt_residuals`] re-evaluates the
//! full first-order system term by term, and [`grid_oracle`] searches the
//! feasible region by brute force. Both are meant to catch an algebra slip
//! in the solvers, so they share no code path with them beyond the
//! constraint definitions.

use std::fmt;

use crate::gp_model::{DesignVariables, GPCoefficients};
use crate::numeric::pow_pos;
use crate::primal_solver::PrimalSolution;

/// Scaled residuals of the full KKT system at a candidate point.
///
/// Stationarity residuals are normalized by the largest absolute term in
/// their equation; the raw terms span many orders of magnitude across units,
/// so only the normalized residual is comparable to a single tolerance.
/// Feasibility entries are violation magnitudes (zero when satisfied), with
/// `g3` normalized by `x1`. Complementary-slackness entries are
/// `|lambda g| / (1 + lambda)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KKTReport {
    pub stationarity: [f64; 2],
    pub complementary_slackness: [f64; 3],
    pub primal_feasibility: [f64; 3],
    pub dual_feasibility: [f64; 3],
    pub max_violation: f64,
}

/// Result of a grid-oracle search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub best_point: DesignVariables,
    pub best_objective: f64,
    /// Total number of grid points evaluated.
    pub evaluations: u64,
    /// Fraction of evaluated points that were feasible, over all passes.
    pub feasible_fraction: f64,
}

/// Rectangular search bracket in design space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridBracket {
    pub x1_lo: f64,
    pub x1_hi: f64,
    pub x2_lo: f64,
    pub x2_hi: f64,
}

/// How the initial oracle bracket is seeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedMode {
    /// Centre the first pass on the closed-form solution.
    ClosedForm,
    /// Centre on the dimensional-analysis scale `x2 ~ sqrt(c12)`,
    /// `x1 ~ k x2`; lets the oracle run without trusting the solver
    /// under test.
    DimensionalAnalysis,
}

#[derive(Debug, Clone, PartialEq)]
pub enum VerifyError {
    /// No feasible grid point anywhere in the bracket.
    OracleInfeasible { bracket: GridBracket },
    /// Propagated solver failure while seeding the bracket.
    Seed(crate::primal_solver::SolveError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::OracleInfeasible { bracket } => write!(
                f,
                "no feasible point on the grid: x1 in [{:e}, {:e}], x2 in [{:e}, {:e}]",
                bracket.x1_lo, bracket.x1_hi, bracket.x2_lo, bracket.x2_hi
            ),
            VerifyError::Seed(e) => write!(f, "oracle bracket seeding failed: {e}"),
        }
    }
}

impl std::error::Error for VerifyError {}

/// Feasibility tolerance used by the oracle.
pub const ORACLE_FEAS_TOL: f64 = 1e-9;

/// Grid resolution per axis per pass.
const GRID_POINTS: usize = 400;

/// Evaluate every KKT relation at a candidate point with the multipliers it
/// carries. Uses the `k` passed in (not `candidate.k`) so that perturbed
/// candidates can be scored against the program they claim to solve.
pub fn kkt_residuals(
    coeffs: &GPCoefficients,
    k: f64,
    candidate: &PrimalSolution,
) -> KKTReport {
    let x1 = candidate.x.x1;
    let x2 = candidate.x.x2;
    let n = coeffs.n;
    let (l1, l2, l3) = (candidate.lambda1, candidate.lambda2, candidate.lambda3);

    let stationarity_x1 = normalized_sum(&[
        coeffs.c * x2 * x2,
        l1 * coeffs.c11 * pow_pos(x2, -3.0),
        3.0 * l2 * coeffs.c21 * x1 * x1 * pow_pos(x2, -n - 3.0),
        -l3,
    ]);
    let stationarity_x2 = normalized_sum(&[
        2.0 * coeffs.c * x1 * x2,
        -3.0 * l1 * coeffs.c11 * x1 * pow_pos(x2, -4.0),
        -2.0 * l1 * coeffs.c12 * pow_pos(x2, -3.0),
        -l2 * (n + 3.0) * coeffs.c21 * x1.powi(3) * pow_pos(x2, -n - 4.0),
        k * l3,
    ]);

    let r = coeffs.constraint_residuals(&candidate.x, k);
    let g = [r.g1, r.g2, r.g3 / x1];

    let complementary_slackness = [
        (l1 * g[0]).abs() / (1.0 + l1),
        (l2 * g[1]).abs() / (1.0 + l2),
        (l3 * g[2]).abs() / (1.0 + l3),
    ];
    let primal_feasibility = [g[0].max(0.0), g[1].max(0.0), g[2].max(0.0)];
    let dual_feasibility = [(-l1).max(0.0), (-l2).max(0.0), (-l3).max(0.0)];

    let max_violation = [stationarity_x1.abs(), stationarity_x2.abs()]
        .iter()
        .chain(complementary_slackness.iter())
        .chain(primal_feasibility.iter())
        .chain(dual_feasibility.iter())
        .fold(0.0f64, |a, v| a.max(*v));

    KKTReport {
        stationarity: [stationarity_x1, stationarity_x2],
        complementary_slackness,
        primal_feasibility,
        dual_feasibility,
        max_violation,
    }
}

fn normalized_sum(terms: &[f64]) -> f64 {
    let scale = terms.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if scale == 0.0 {
        0.0
    } else {
        terms.iter().sum::<f64>() / scale
    }
}

/// Brute-force grid search seeded on the closed-form solution.
pub fn grid_oracle(
    coeffs: &GPCoefficients,
    k: f64,
    refinements: u32,
) -> Result<OracleResult, VerifyError> {
    grid_oracle_seeded(coeffs, k, refinements, SeedMode::ClosedForm)
}

/// Brute-force grid search with an explicit seeding mode.
pub fn grid_oracle_seeded(
    coeffs: &GPCoefficients,
    k: f64,
    refinements: u32,
    seed: SeedMode,
) -> Result<OracleResult, VerifyError> {
    let (x1_seed, x2_seed) = match seed {
        SeedMode::ClosedForm => {
            let s = crate::primal_solver::solve(coeffs, k).map_err(VerifyError::Seed)?;
            (s.x.x1, s.x.x2)
        }
        SeedMode::DimensionalAnalysis => {
            let x2 = coeffs.c12.sqrt();
            (k * x2, x2)
        }
    };
    let bracket = GridBracket {
        x1_lo: x1_seed / 10.0,
        x1_hi: x1_seed * 10.0,
        x2_lo: x2_seed / 10.0,
        x2_hi: x2_seed * 10.0,
    };
    grid_oracle_in_bracket(coeffs, k, refinements, bracket)
}

/// Brute-force grid search over an explicit starting bracket.
///
/// Each pass lays a log-spaced `400 x 400` grid over the bracket and keeps
/// the best feasible point (ties broken toward smaller `x1`, then smaller
/// `x2` by the ascending scan order). Between passes the bracket re-centres
/// on the incumbent and shrinks tenfold per side. Fully deterministic.
pub fn grid_oracle_in_bracket(
    coeffs: &GPCoefficients,
    k: f64,
    refinements: u32,
    bracket: GridBracket,
) -> Result<OracleResult, VerifyError> {
    let mut best: Option<(f64, DesignVariables)> = None;
    let mut evaluations = 0u64;
    let mut feasible = 0u64;
    let mut current = bracket;
    let mut half_span_decades = (bracket.x1_hi / bracket.x1_lo).log10() / 2.0;

    for _pass in 0..refinements.max(1) {
        let pass_best = scan_grid(coeffs, k, &current, &mut evaluations, &mut feasible);
        if let Some((obj, x)) = pass_best {
            if best.is_none_or(|(b, _)| obj < b) {
                best = Some((obj, x));
            }
        }
        let Some((_, centre)) = best else {
            return Err(VerifyError::OracleInfeasible { bracket });
        };
        half_span_decades /= 10.0;
        let factor = 10f64.powf(half_span_decades);
        current = GridBracket {
            x1_lo: centre.x1 / factor,
            x1_hi: centre.x1 * factor,
            x2_lo: centre.x2 / factor,
            x2_hi: centre.x2 * factor,
        };
    }

    match best {
        Some((best_objective, best_point)) => Ok(OracleResult {
            best_point,
            best_objective,
            evaluations,
            feasible_fraction: feasible as f64 / evaluations as f64,
        }),
        None => Err(VerifyError::OracleInfeasible { bracket }),
    }
}

fn scan_grid(
    coeffs: &GPCoefficients,
    k: f64,
    bracket: &GridBracket,
    evaluations: &mut u64,
    feasible: &mut u64,
) -> Option<(f64, DesignVariables)> {
    let log_axis = |lo: f64, hi: f64, i: usize| -> f64 {
        (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (GRID_POINTS - 1) as f64).exp()
    };
    let mut best: Option<(f64, DesignVariables)> = None;
    for i in 0..GRID_POINTS {
        let x1 = log_axis(bracket.x1_lo, bracket.x1_hi, i);
        for j in 0..GRID_POINTS {
            let x2 = log_axis(bracket.x2_lo, bracket.x2_hi, j);
            let x = DesignVariables { x1, x2 };
            *evaluations += 1;
            if coeffs.is_feasible(&x, k, ORACLE_FEAS_TOL) {
                *feasible += 1;
                let obj = coeffs.objective(&x);
                if best.is_none_or(|(b, _)| obj < b) {
                    best = Some((obj, x));
                }
            }
        }
    }
    best
}

/// Relative duality gap `(primal - dual) / primal`.
pub fn duality_gap(primal_objective: f64, dual_objective: f64) -> f64 {
    (primal_objective - dual_objective) / primal_objective
}
