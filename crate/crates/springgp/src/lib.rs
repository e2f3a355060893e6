//! Minimum-mass design of helical compression springs made of power-law
//! (Hollomon) materials.
//!
//! A spring wire that follows the constitutive law `sigma = K|eps|^(n-1) eps`
//! does not respond linearly to torsion, so the classical spring design
//! formulas (and the optimization shortcuts built on them) no longer apply.
//! This crate carries the full chain from mechanics to certified optimum:
//!
//! - [`mechanics`] — torsional shear stress, generalized area moment, tip
//!   deflection, and mass of a power-law wire spring.
//! - [`gp_model`] — the three-constraint geometric program over coil diameter
//!   `x1` and wire diameter `x2`, with posynomial coefficients built from
//!   physical data.
//! - [`primal_solver`] — closed-form KKT solutions per active-set case, the
//!   spring-index feasibility function `g(k)`, and the admissible index
//!   interval `(1, k*]` located by bracketed bisection in the log domain.
//! - [`dual_solver`] — the geometric-programming dual: stationary multiplier
//!   ratios, the dual optimum `v*`, and primal recovery from the dual.
//! - [`verifier`] — independent checks: KKT residual reports, a brute-force
//!   grid-search oracle, and duality-gap evaluation.
//! - [`cli`] — config parsing and the `springgp` command front end.
//!
//! All computation is in strict SI units (Pa, m, N, kg). Config files accept
//! MPa for moduli and stress limits; conversion happens once at the parse
//! boundary.
//!
//! # Example
//!
//! ```
//! use springgp::mechanics::{LoadCase, MaterialSpec};
//! use springgp::gp_model::build_coefficients;
//! use springgp::primal_solver::{admissible_interval, solve};
//!
//! let material = MaterialSpec::new(960.0e6, 0.1, 0.275, 7700.0).unwrap();
//! let load = LoadCase::new(10.0, 200.0e6, 0.03).unwrap();
//! let coeffs = build_coefficients(&material, 10.0, &load).unwrap();
//!
//! let interval = admissible_interval(&coeffs).unwrap();
//! assert!(interval.k_star > 1.0);
//!
//! let solution = solve(&coeffs, 10.0).unwrap();
//! assert!(solution.x.x1 > solution.x.x2);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; the thin
//! `springgp` binary exposes the same pipeline as batch subcommands.

// Validation deliberately writes `!(x > 0.0)` so NaN fails the check too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dual_solver;
pub mod gp_model;
pub mod mechanics;
pub(crate) mod numeric;
pub mod primal_solver;
pub mod verifier;

pub use gp_model::{ConstraintResiduals, DesignVariables, GPCoefficients};
pub use mechanics::{LoadCase, MaterialSpec, SpringGeometry, ValidationError, WireTorsion};
pub use primal_solver::{ActiveCase, KInterval, PrimalSolution, SolveError};
