//! Command front end behind the `springgp` binary.
//!
//! ```text
//! springgp <command> --config PATH [--k FLOAT] [--k-min FLOAT --k-max FLOAT]
//!          [--steps INT] [--out PATH] [--format table|csv]
//! ```
//!
//! Commands: `analyze`, `interval`, `solve`, `sweep`, `dual`, `verify`.
//! Exit codes: 0 success, 2 config/argument validation failure, 3 no
//! admissible spring index, 4 internal verification failure.
//!
//! Tables print 6 significant figures; CSV output carries 17 significant
//! digits, comma separators, a header row, and LF line endings, so repeated
//! runs are byte-identical.

mod config;

pub use config::{parse_config, parse_config_str, DesignProblemConfig};

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::dual_solver::solve_dual;
use crate::gp_model::{build_coefficients, DesignVariables, GPCoefficients};
use crate::mechanics::{max_shear_stress, spring_mass, tip_deflection, ValidationError};
use crate::primal_solver::{
    admissible_interval, g_log_residual, solve, sweep, PrimalSolution, SolveError,
};
use crate::verifier::{duality_gap, grid_oracle, kkt_residuals};

/// Points per emitted plot curve.
const PLOT_POINTS: usize = 200;

/// Default sweep range start and row count when neither flags nor config
/// provide them; the upper end defaults to `k*`.
const DEFAULT_SWEEP_K_MIN: f64 = 2.0;
const DEFAULT_SWEEP_STEPS: usize = 50;

/// Allowed closed-form/oracle disagreement in `verify`.
const ORACLE_AGREEMENT_REL: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Interval,
    Solve,
    Sweep,
    Dual,
    Verify,
}

impl Command {
    fn parse(s: &str) -> Option<Command> {
        match s {
            "analyze" => Some(Command::Analyze),
            "interval" => Some(Command::Interval),
            "solve" => Some(Command::Solve),
            "sweep" => Some(Command::Sweep),
            "dual" => Some(Command::Dual),
            "verify" => Some(Command::Verify),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliArgs {
    pub command: Command,
    pub config: PathBuf,
    pub k: Option<f64>,
    pub k_min: Option<f64>,
    pub k_max: Option<f64>,
    pub steps: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    Validation(ValidationError),
    Io {
        path: String,
        message: String,
    },
    Solve(SolveError),
    Oracle(crate::verifier::VerifyError),
    /// KKT certification of a solver output failed.
    Verification {
        what: String,
    },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse { path, line, message } => {
                if *line == 0 {
                    write!(f, "{path}: {message}")
                } else {
                    write!(f, "{path}:{line}: {message}")
                }
            }
            CliError::Validation(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Solve(e) => write!(f, "{e}"),
            CliError::Oracle(e) => write!(f, "{e}"),
            CliError::Verification { what } => write!(f, "verification failure: {what}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Solve(e)
    }
}

impl CliError {
    /// Map to the documented process exit codes.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Parse { .. }
            | CliError::Validation(_)
            | CliError::Io { .. } => 2,
            CliError::Solve(e) => match e {
                SolveError::NoAdmissibleIndex { .. } | SolveError::RootSearchCapped { .. } => 3,
                _ => 2,
            },
            CliError::Oracle(_) | CliError::Verification { .. } => 4,
        }
    }
}

pub const USAGE: &str = "\
usage: springgp <command> --config PATH [options]

commands:
  analyze    stress, deflection, and mass of the configured (D, d) design
  interval   admissible spring-index interval (1, k*]
  solve      closed-form minimum-mass design at a fixed index k
  sweep      designs across a k range; emits plot CSVs with --out
  dual       dual solution, recovered design, duality gap
  verify     closed form vs grid oracle, KKT certification

options:
  --config PATH      design problem file (required)
  --k FLOAT          spring index for solve/verify (> 1)
  --k-min FLOAT      sweep range lower end (> 1)
  --k-max FLOAT      sweep range upper end
  --steps INT        sweep row count (>= 2)
  --out PATH         directory for emitted CSV files
  --format FMT       table (default) or csv
";

pub fn parse_args(args: &[String]) -> Result<CliArgs, CliError> {
    let mut command = None;
    let mut config = None;
    let mut k = None;
    let mut k_min = None;
    let mut k_max = None;
    let mut steps = None;
    let mut out = None;
    let mut format = Format::Table;

    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let mut value_for = |flag: &str| -> Result<String, CliError> {
            iter.next()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("{flag} requires a value\n\n{USAGE}")))
        };
        match arg.as_str() {
            "--config" => config = Some(PathBuf::from(value_for("--config")?)),
            "--k" => k = Some(parse_flag_f64("--k", &value_for("--k")?)?),
            "--k-min" => k_min = Some(parse_flag_f64("--k-min", &value_for("--k-min")?)?),
            "--k-max" => k_max = Some(parse_flag_f64("--k-max", &value_for("--k-max")?)?),
            "--steps" => {
                let raw = value_for("--steps")?;
                steps = Some(raw.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("--steps: `{raw}` is not a positive integer"))
                })?);
            }
            "--out" => out = Some(PathBuf::from(value_for("--out")?)),
            "--format" => {
                format = match value_for("--format")?.as_str() {
                    "table" => Format::Table,
                    "csv" => Format::Csv,
                    other => {
                        return Err(CliError::Usage(format!(
                            "--format must be `table` or `csv` (got `{other}`)"
                        )))
                    }
                }
            }
            "--help" | "-h" => return Err(CliError::Usage(USAGE.to_string())),
            other => {
                if command.is_none() && !other.starts_with('-') {
                    command = Command::parse(other).map(Some).unwrap_or(None);
                    if command.is_none() {
                        return Err(CliError::Usage(format!(
                            "unknown command `{other}`\n\n{USAGE}"
                        )));
                    }
                } else {
                    return Err(CliError::Usage(format!(
                        "unexpected argument `{other}`\n\n{USAGE}"
                    )));
                }
            }
        }
    }

    let command =
        command.ok_or_else(|| CliError::Usage(format!("missing command\n\n{USAGE}")))?;
    let config = config
        .ok_or_else(|| CliError::Usage(format!("--config is required\n\n{USAGE}")))?;

    Ok(CliArgs {
        command,
        config,
        k,
        k_min,
        k_max,
        steps,
        out,
        format,
    })
}

fn parse_flag_f64(flag: &str, raw: &str) -> Result<f64, CliError> {
    raw.parse::<f64>()
        .map_err(|_| CliError::Usage(format!("{flag}: `{raw}` is not a number")))
}

/// Full pipeline: parse arguments and config, run the command, map errors to
/// exit codes. The binary is a thin wrapper around this.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.iter().any(|a| a == "--help" || a == "-h") {
        let _ = write!(out, "{USAGE}");
        return 0;
    }
    let parsed = match parse_args(args) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return e.exit_code();
        }
    };
    let config = match parse_config(&parsed.config) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "springgp: {e}");
            return e.exit_code();
        }
    };
    for warning in config.material.warnings() {
        let _ = writeln!(err, "warning: {warning}");
    }
    match run_command(&config, &parsed, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "springgp: {e}");
            e.exit_code()
        }
    }
}

/// Execute one command against a parsed config. CLI flags take precedence
/// over the config's `options.*` values.
pub fn run_command(
    config: &DesignProblemConfig,
    args: &CliArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let coeffs = build_coefficients(&config.material, config.turns, &config.load)
        .map_err(CliError::Validation)?;
    match args.command {
        Command::Analyze => cmd_analyze(config, &coeffs, args, out),
        Command::Interval => cmd_interval(config, &coeffs, args, err, out),
        Command::Solve => cmd_solve(config, &coeffs, args, out),
        Command::Sweep => cmd_sweep(config, &coeffs, args, out),
        Command::Dual => cmd_dual(&coeffs, args, out),
        Command::Verify => cmd_verify(config, &coeffs, args, out),
    }
}

fn required_k(config: &DesignProblemConfig, args: &CliArgs) -> Result<f64, CliError> {
    args.k.or(config.k).ok_or_else(|| {
        CliError::Usage("this command needs a spring index: pass --k or set options.k".into())
    })
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

// ---------------------------------------------------------------------------
// commands

fn cmd_analyze(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let geom = config.analyze_geometry.as_ref().ok_or_else(|| {
        CliError::Usage("analyze needs spring.D_m and spring.d_m in the config".into())
    })?;
    let stress = max_shear_stress(&config.load, geom, &config.material);
    let deflection = tip_deflection(&config.load, geom, &config.material);
    let mass = spring_mass(geom, &config.material);
    let x = DesignVariables {
        x1: geom.coil_diameter,
        x2: geom.wire_diameter,
    };
    let gp_mass = coeffs.objective(&x);
    let stress_margin = 1.0 - stress / config.load.allow_stress;
    let deflection_margin = 1.0 - deflection / config.load.allow_deflection;

    let rows = [
        ("D_m", geom.coil_diameter),
        ("d_m", geom.wire_diameter),
        ("spring_index", geom.spring_index()),
        ("turns", geom.turns),
        ("mass_kg", mass),
        ("gp_objective_kg", gp_mass),
        ("max_shear_stress_Pa", stress),
        ("allow_stress_Pa", config.load.allow_stress),
        ("stress_margin", stress_margin),
        ("tip_deflection_m", deflection),
        ("allow_deflection_m", config.load.allow_deflection),
        ("deflection_margin", deflection_margin),
    ];
    match args.format {
        Format::Csv => write_quantity_csv(out, rows.iter().map(|(n, v)| (*n, full(*v)))),
        Format::Table => {
            writeln!(out, "spring analysis").map_err(write_error)?;
            for (name, value) in rows {
                write_table_row(out, name, &sig6(value))?;
            }
            Ok(())
        }
    }
}

fn cmd_interval(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
    err: &mut dyn Write,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let interval = admissible_interval(coeffs)?;
    if interval.multiple_roots_suspected {
        let _ = writeln!(
            err,
            "warning: g(k) changes sign inside (1, k*); multiple roots suspected"
        );
    }
    // Minimum-mass index inside the practical range: mass grows with k, so
    // it is the low end of the intersection with (1, k*].
    let recommended = if config.practical_k_min <= interval.k_star {
        Some(config.practical_k_min)
    } else {
        None
    };
    let recommended_mass = match recommended {
        Some(k) => Some(solve(coeffs, k)?.objective),
        None => None,
    };
    let neg = interval.negative_root.unwrap_or(f64::NAN);

    match args.format {
        Format::Csv => {
            let rows = [
                ("k_star".to_string(), full(interval.k_star)),
                ("interval_lower".to_string(), full(interval.lower)),
                ("negative_root".to_string(), full(neg)),
                ("practical_k_min".to_string(), full(config.practical_k_min)),
                ("practical_k_max".to_string(), full(config.practical_k_max)),
                (
                    "recommended_k".to_string(),
                    recommended.map_or("none".to_string(), full),
                ),
                (
                    "mass_at_recommended_kg".to_string(),
                    recommended_mass.map_or("none".to_string(), full),
                ),
            ];
            write_quantity_csv(out, rows.iter().map(|(n, v)| (n.as_str(), v.clone())))
        }
        Format::Table => {
            writeln!(out, "admissible spring-index interval").map_err(write_error)?;
            write_table_row(out, "k_star", &sig6(interval.k_star))?;
            write_table_row(out, "interval", &format!("(1, {}]", sig6(interval.k_star)))?;
            write_table_row(out, "negative_root_diag", &sig6(neg))?;
            write_table_row(
                out,
                "practical_range",
                &format!("[{}, {}]", sig6(config.practical_k_min), sig6(config.practical_k_max)),
            )?;
            match (recommended, recommended_mass) {
                (Some(k), Some(m)) => {
                    write_table_row(out, "recommended_k", &sig6(k))?;
                    write_table_row(out, "mass_at_recommended_kg", &sig6(m))?;
                }
                _ => {
                    write_table_row(out, "recommended_k", "none (k* below practical range)")?;
                }
            }
            Ok(())
        }
    }
}

fn solution_rows(coeffs: &GPCoefficients, k: f64, s: &PrimalSolution) -> Vec<(String, f64)> {
    let residuals = coeffs.constraint_residuals(&s.x, k);
    let report = kkt_residuals(coeffs, k, s);
    vec![
        ("k".to_string(), k),
        ("x1_m".to_string(), s.x.x1),
        ("x2_m".to_string(), s.x.x2),
        ("mass_kg".to_string(), s.objective),
        ("lambda1".to_string(), s.lambda1),
        ("lambda2".to_string(), s.lambda2),
        ("lambda3".to_string(), s.lambda3),
        ("g1".to_string(), residuals.g1),
        ("g2".to_string(), residuals.g2),
        ("g3_over_x1".to_string(), residuals.g3 / s.x.x1),
        ("kkt_max_violation".to_string(), report.max_violation),
    ]
}

fn cmd_solve(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let k = required_k(config, args)?;
    let s = solve(coeffs, k)?;
    let report = kkt_residuals(coeffs, k, &s);
    if report.max_violation > config.kkt_tol {
        return Err(CliError::Verification {
            what: format!(
                "solver output failed KKT certification: max violation {:e} > {:e}",
                report.max_violation, config.kkt_tol
            ),
        });
    }
    let rows = solution_rows(coeffs, k, &s);
    match args.format {
        Format::Csv => {
            let mut all: Vec<(String, String)> =
                vec![("active_case".to_string(), s.active_case.to_string())];
            all.extend(rows.into_iter().map(|(n, v)| (n, full(v))));
            write_quantity_csv(out, all.iter().map(|(n, v)| (n.as_str(), v.clone())))
        }
        Format::Table => {
            writeln!(out, "primal solution at k = {}", sig6(k)).map_err(write_error)?;
            write_table_row(out, "active_case", &s.active_case.to_string())?;
            for (name, value) in rows {
                write_table_row(out, &name, &sig6(value))?;
            }
            Ok(())
        }
    }
}

fn resolve_sweep_range(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
) -> Result<(f64, f64, usize), CliError> {
    let k_max = match args.k_max.or(config.k_max) {
        Some(v) => v,
        None => admissible_interval(coeffs)?.k_star,
    };
    let k_min = args.k_min.or(config.k_min).unwrap_or(DEFAULT_SWEEP_K_MIN);
    let steps = args.steps.or(config.steps).unwrap_or(DEFAULT_SWEEP_STEPS);
    Ok((k_min, k_max, steps))
}

fn cmd_sweep(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (k_min, k_max, steps) = resolve_sweep_range(config, coeffs, args)?;
    let rows = sweep(coeffs, k_min, k_max, steps)?;

    match args.format {
        Format::Csv => {
            write_sweep_csv(out, coeffs, &rows).map_err(write_error)?;
        }
        Format::Table => {
            writeln!(
                out,
                "sweep over k in [{}, {}], {} rows",
                sig6(k_min),
                sig6(k_max),
                steps
            )
            .map_err(write_error)?;
            writeln!(
                out,
                "  {:>10} {:>12} {:>12} {:>12} {:>9} {:>12} {:>12}",
                "k", "x1_m", "x2_m", "mass_kg", "case", "g1", "g2"
            )
            .map_err(write_error)?;
            for row in &rows {
                let r = coeffs.constraint_residuals(
                    &DesignVariables { x1: row.x1, x2: row.x2 },
                    row.k,
                );
                writeln!(
                    out,
                    "  {:>10} {:>12} {:>12} {:>12} {:>9} {:>12} {:>12}",
                    sig6(row.k),
                    sig6(row.x1),
                    sig6(row.x2),
                    sig6(row.objective),
                    row.active_case,
                    sig6(r.g1),
                    sig6(r.g2)
                )
                .map_err(write_error)?;
            }
        }
    }

    let out_dir = args.out.clone().or_else(|| config.out_dir.clone());
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
        let k_star = admissible_interval(coeffs)?.k_star;

        let sweep_path = dir.join("sweep.csv");
        let mut buffer = Vec::new();
        write_sweep_csv(&mut buffer, coeffs, &rows).map_err(write_error)?;
        std::fs::write(&sweep_path, &buffer).map_err(|e| io_error(&sweep_path, e))?;

        // Fig-2 analog: the sign-carrying log residual of g across
        // (1, 1.2 k*], 200 log-spaced points.
        let g_path = dir.join("g_curve.csv");
        let mut g_csv = String::from("k,g_log_residual\n");
        let top = 1.2 * k_star;
        for i in 0..PLOT_POINTS {
            let k = ((i + 1) as f64 / PLOT_POINTS as f64 * top.ln()).exp();
            g_csv.push_str(&format!("{},{}\n", full(k), full(g_log_residual(coeffs, k))));
        }
        std::fs::write(&g_path, g_csv).map_err(|e| io_error(&g_path, e))?;

        // Mass across the admissible interval (1, k*].
        let mass_path = dir.join("mass_curve.csv");
        let mut mass_csv = String::from("k,mass_kg\n");
        for i in 0..PLOT_POINTS {
            let k = ((i + 1) as f64 / PLOT_POINTS as f64 * k_star.ln()).exp();
            let s = solve(coeffs, k)?;
            mass_csv.push_str(&format!("{},{}\n", full(k), full(s.objective)));
        }
        std::fs::write(&mass_path, mass_csv).map_err(|e| io_error(&mass_path, e))?;
    }
    Ok(())
}

fn write_sweep_csv(
    out: &mut dyn Write,
    coeffs: &GPCoefficients,
    rows: &[crate::primal_solver::SweepPoint],
) -> std::io::Result<()> {
    writeln!(out, "k,x1_m,x2_m,mass_kg,active_case,g1,g2")?;
    for row in rows {
        let r = coeffs.constraint_residuals(&DesignVariables { x1: row.x1, x2: row.x2 }, row.k);
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            full(row.k),
            full(row.x1),
            full(row.x2),
            full(row.objective),
            row.active_case,
            full(r.g1),
            full(r.g2)
        )?;
    }
    Ok(())
}

fn cmd_dual(coeffs: &GPCoefficients, args: &CliArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let dual = solve_dual(coeffs)?;
    let primal = solve(coeffs, dual.k_star)?;
    let gap = duality_gap(primal.objective, dual.v_star);
    let m = &dual.multipliers;
    let rows = [
        ("k_star", dual.k_star),
        ("v_star_kg", dual.v_star),
        ("ln_v_star", dual.ln_v_star),
        ("lambda01", m.lambda01),
        ("lambda11", m.lambda11),
        ("lambda12", m.lambda12),
        ("lambda21", m.lambda21),
        ("lambda31", m.lambda31),
        ("recovered_x1_m", dual.recovered.x1),
        ("recovered_x2_m", dual.recovered.x2),
        ("primal_mass_at_k_star_kg", primal.objective),
        ("duality_gap", gap),
    ];
    match args.format {
        Format::Csv => write_quantity_csv(out, rows.iter().map(|(n, v)| (*n, full(*v)))),
        Format::Table => {
            writeln!(out, "dual solution").map_err(write_error)?;
            for (name, value) in rows {
                write_table_row(out, name, &sig6(value))?;
            }
            Ok(())
        }
    }
}

fn cmd_verify(
    config: &DesignProblemConfig,
    coeffs: &GPCoefficients,
    args: &CliArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let k = required_k(config, args)?;
    let s = solve(coeffs, k)?;
    let report = kkt_residuals(coeffs, k, &s);
    let oracle = grid_oracle(coeffs, k, 3).map_err(CliError::Oracle)?;
    let oracle_rel = (oracle.best_objective - s.objective) / s.objective;
    let dual = solve_dual(coeffs)?;
    let primal_at_root = solve(coeffs, dual.k_star)?;
    let gap = duality_gap(primal_at_root.objective, dual.v_star);

    let rows = [
        ("k", k),
        ("closed_form_mass_kg", s.objective),
        ("oracle_mass_kg", oracle.best_objective),
        ("oracle_relative_excess", oracle_rel),
        ("oracle_evaluations", oracle.evaluations as f64),
        ("oracle_feasible_fraction", oracle.feasible_fraction),
        ("kkt_max_violation", report.max_violation),
        ("k_star", dual.k_star),
        ("v_star_kg", dual.v_star),
        ("primal_mass_at_k_star_kg", primal_at_root.objective),
        ("duality_gap_at_k_star", gap),
    ];
    match args.format {
        Format::Csv => write_quantity_csv(out, rows.iter().map(|(n, v)| (*n, full(*v))))?,
        Format::Table => {
            writeln!(out, "verification at k = {}", sig6(k)).map_err(write_error)?;
            for (name, value) in rows {
                write_table_row(out, name, &sig6(value))?;
            }
        }
    }

    if report.max_violation > config.kkt_tol {
        return Err(CliError::Verification {
            what: format!(
                "KKT max violation {:e} exceeds threshold {:e}",
                report.max_violation, config.kkt_tol
            ),
        });
    }
    if oracle_rel < -ORACLE_AGREEMENT_REL {
        return Err(CliError::Verification {
            what: format!(
                "grid oracle found a better feasible design ({:e} kg vs {:e} kg)",
                oracle.best_objective, s.objective
            ),
        });
    }
    if oracle_rel.abs() > ORACLE_AGREEMENT_REL {
        return Err(CliError::Verification {
            what: format!("oracle disagrees with the closed form by {oracle_rel:e}"),
        });
    }
    if gap.abs() > 1e-8 {
        return Err(CliError::Verification {
            what: format!("duality gap at k* is {gap:e}"),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// formatting

fn write_error(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<output>".to_string(),
        message: e.to_string(),
    }
}

fn write_table_row(out: &mut dyn Write, name: &str, value: &str) -> Result<(), CliError> {
    writeln!(out, "  {name:<26}{value}").map_err(write_error)
}

fn write_quantity_csv<'a, I>(out: &mut dyn Write, rows: I) -> Result<(), CliError>
where
    I: Iterator<Item = (&'a str, String)>,
{
    writeln!(out, "quantity,value").map_err(write_error)?;
    for (name, value) in rows {
        writeln!(out, "{name},{value}").map_err(write_error)?;
    }
    Ok(())
}

/// Full-precision float for CSV: 17 significant digits round-trip f64.
fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// 6 significant figures for tables: plain decimal in a readable range,
/// scientific outside it.
fn sig6(x: f64) -> String {
    sig(x, 6)
}

fn sig(x: f64, figures: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..figures as i32).contains(&exponent) {
        let decimals = (figures as i32 - 1 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", figures - 1, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figure_formatting() {
        assert_eq!(sig6(33.075646), "33.0756");
        assert_eq!(sig6(0.010249013), "0.0102490");
        assert_eq!(sig6(-0.64516129), "-0.645161");
        assert_eq!(sig6(189_989.88), "189990");
        assert_eq!(sig6(1.2786e-10), "1.27860e-10");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn full_precision_round_trips() {
        for &x in &[0.010249013526797637, 33.075645, -0.6451612903225806, 1e-300] {
            let printed = full(x);
            let back: f64 = printed.parse().unwrap();
            assert_eq!(back, x, "{printed}");
        }
    }

    #[test]
    fn args_parse_and_reject() {
        let args: Vec<String> = ["solve", "--config", "cfg", "--k", "10", "--format", "csv"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let parsed = parse_args(&args).unwrap();
        assert_eq!(parsed.command, Command::Solve);
        assert_eq!(parsed.k, Some(10.0));
        assert_eq!(parsed.format, Format::Csv);

        let bad: Vec<String> = ["frobnicate", "--config", "cfg"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(matches!(parse_args(&bad), Err(CliError::Usage(_))));

        let missing: Vec<String> = ["solve"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(parse_args(&missing), Err(CliError::Usage(_))));
    }

    #[test]
    fn exit_codes_map_per_contract() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Solve(SolveError::IndexNotAboveOne { k: 0.5 }).exit_code(),
            2
        );
        assert_eq!(
            CliError::Solve(SolveError::NoAdmissibleIndex { k_star: 1.0 }).exit_code(),
            3
        );
        assert_eq!(
            CliError::Verification { what: "kkt".into() }.exit_code(),
            4
        );
    }
}
