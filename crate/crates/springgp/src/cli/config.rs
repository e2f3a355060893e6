//! Flat key-value config files describing a design problem.
//!
//! The format is line-oriented `section.key = value` with `#` comments:
//!
//! ```text
//! material.K_MPa     = 960     # bulk modulus, MPa
//! material.n         = 0.1
//! material.nu        = 0.275
//! material.rho_kg_m3 = 7700
//! load.P_N           = 10.0
//! load.tau_max_MPa   = 200
//! load.delta_max_m   = 0.03
//! spring.turns       = 10
//! ```
//!
//! Optional keys: `spring.D_m` and `spring.d_m` (the candidate design that
//! `analyze` inspects), `options.k`, `options.k_min`, `options.k_max`,
//! `options.steps`, `options.practical_k_min`, `options.practical_k_max`,
//! `options.kkt_tol`, `options.out_dir`. Unknown or duplicate keys are
//! rejected with line context. MPa fields are converted to Pa here and
//! nowhere else.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use crate::mechanics::{LoadCase, MaterialSpec, SpringGeometry, ValidationError};

use super::CliError;

pub const DEFAULT_PRACTICAL_K_MIN: f64 = 4.0;
pub const DEFAULT_PRACTICAL_K_MAX: f64 = 12.0;
pub const DEFAULT_KKT_TOL: f64 = 1e-8;

const KNOWN_KEYS: &[&str] = &[
    "material.K_MPa",
    "material.n",
    "material.nu",
    "material.rho_kg_m3",
    "load.P_N",
    "load.tau_max_MPa",
    "load.delta_max_m",
    "spring.turns",
    "spring.D_m",
    "spring.d_m",
    "options.k",
    "options.k_min",
    "options.k_max",
    "options.steps",
    "options.practical_k_min",
    "options.practical_k_max",
    "options.kkt_tol",
    "options.out_dir",
];

/// A fully validated design problem in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignProblemConfig {
    pub material: MaterialSpec,
    pub load: LoadCase,
    pub turns: f64,
    /// Candidate geometry for `analyze`; both of `spring.D_m`, `spring.d_m`.
    pub analyze_geometry: Option<SpringGeometry>,
    pub k: Option<f64>,
    pub k_min: Option<f64>,
    pub k_max: Option<f64>,
    pub steps: Option<usize>,
    pub practical_k_min: f64,
    pub practical_k_max: f64,
    pub kkt_tol: f64,
    pub out_dir: Option<PathBuf>,
}

pub fn parse_config(path: &Path) -> Result<DesignProblemConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_config_str(&text, &path.display().to_string())
}

pub fn parse_config_str(text: &str, origin: &str) -> Result<DesignProblemConfig, CliError> {
    let mut values: HashMap<String, (usize, String)> = HashMap::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(parse_error(origin, line_no, "expected `key = value`"));
        };
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(parse_error(origin, line_no, &format!("unknown key `{key}`")));
        }
        if values.insert(key.to_string(), (line_no, value.to_string())).is_some() {
            return Err(parse_error(origin, line_no, &format!("duplicate key `{key}`")));
        }
    }

    let number = |key: &str| -> Result<f64, CliError> {
        let (line_no, value) = values
            .get(key)
            .ok_or_else(|| parse_error(origin, 0, &format!("missing required key `{key}`")))?;
        value.parse::<f64>().map_err(|_| {
            parse_error(origin, *line_no, &format!("key `{key}`: `{value}` is not a number"))
        })
    };
    let optional_number = |key: &str| -> Result<Option<f64>, CliError> {
        match values.get(key) {
            None => Ok(None),
            Some((line_no, value)) => value.parse::<f64>().map(Some).map_err(|_| {
                parse_error(origin, *line_no, &format!("key `{key}`: `{value}` is not a number"))
            }),
        }
    };

    let k_mpa = number("material.K_MPa")?;
    let n = number("material.n")?;
    let nu = number("material.nu")?;
    let rho = number("material.rho_kg_m3")?;
    let p = number("load.P_N")?;
    let tau_mpa = number("load.tau_max_MPa")?;
    let delta = number("load.delta_max_m")?;
    let turns = number("spring.turns")?;

    let d_coil = optional_number("spring.D_m")?;
    let d_wire = optional_number("spring.d_m")?;
    let k = optional_number("options.k")?;
    let k_min = optional_number("options.k_min")?;
    let k_max = optional_number("options.k_max")?;
    let steps = match values.get("options.steps") {
        None => None,
        Some((line_no, value)) => Some(value.parse::<usize>().map_err(|_| {
            parse_error(
                origin,
                *line_no,
                &format!("key `options.steps`: `{value}` is not a positive integer"),
            )
        })?),
    };
    let practical_k_min =
        optional_number("options.practical_k_min")?.unwrap_or(DEFAULT_PRACTICAL_K_MIN);
    let practical_k_max =
        optional_number("options.practical_k_max")?.unwrap_or(DEFAULT_PRACTICAL_K_MAX);
    let kkt_tol = optional_number("options.kkt_tol")?.unwrap_or(DEFAULT_KKT_TOL);
    let out_dir = values
        .get("options.out_dir")
        .map(|(_, value)| PathBuf::from(value));

    // Validate everything at once so a bad config reports every problem.
    let mut violations = Vec::new();

    let material = MaterialSpec {
        bulk_modulus: k_mpa * 1e6,
        power_index: n,
        poisson_ratio: nu,
        density: rho,
    };
    if let Err(e) = material.validate() {
        violations.extend(e.violations);
    }
    let load = LoadCase {
        axial_load: p,
        allow_stress: tau_mpa * 1e6,
        allow_deflection: delta,
    };
    if let Err(e) = load.validate() {
        violations.extend(e.violations);
    }
    if !(turns >= 1.0) {
        violations.push(format!("spring.turns must be >= 1 (got {turns})"));
    }

    let analyze_geometry = match (d_coil, d_wire) {
        (Some(d_c), Some(d_w)) => {
            let geom = SpringGeometry {
                coil_diameter: d_c,
                wire_diameter: d_w,
                turns,
            };
            if let Err(e) = geom.validate() {
                violations.extend(e.violations);
            }
            Some(geom)
        }
        (None, None) => None,
        _ => {
            violations
                .push("spring.D_m and spring.d_m must be given together".to_string());
            None
        }
    };

    if let Some(k) = k {
        if !(k > 1.0) {
            violations.push(format!("options.k must exceed 1 (got {k})"));
        }
    }
    if let (Some(lo), Some(hi)) = (k_min, k_max) {
        if !(lo > 1.0 && lo < hi) {
            violations.push(format!(
                "options.k_min/k_max must satisfy 1 < k_min < k_max (got {lo}, {hi})"
            ));
        }
    }
    if let Some(s) = steps {
        if s < 2 {
            violations.push(format!("options.steps must be >= 2 (got {s})"));
        }
    }
    if !(practical_k_min > 1.0 && practical_k_min <= practical_k_max) {
        violations.push(format!(
            "practical index range must satisfy 1 < min <= max (got {practical_k_min}, {practical_k_max})"
        ));
    }
    if !(kkt_tol > 0.0) {
        violations.push(format!("options.kkt_tol must be > 0 (got {kkt_tol})"));
    }

    if !violations.is_empty() {
        return Err(CliError::Validation(ValidationError { violations }));
    }

    Ok(DesignProblemConfig {
        material,
        load,
        turns,
        analyze_geometry,
        k,
        k_min,
        k_max,
        steps,
        practical_k_min,
        practical_k_max,
        kkt_tol,
        out_dir,
    })
}

fn parse_error(origin: &str, line: usize, message: &str) -> CliError {
    CliError::Parse {
        path: origin.to_string(),
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: &str = "\
material.K_MPa     = 960
material.n         = 0.1
material.nu        = 0.275
material.rho_kg_m3 = 7700
load.P_N           = 10.0
load.tau_max_MPa   = 200
load.delta_max_m   = 0.03
spring.turns       = 10
";

    #[test]
    fn reference_config_parses_to_si() {
        let cfg = parse_config_str(REFERENCE, "test").unwrap();
        assert_eq!(cfg.material.bulk_modulus, 9.6e8);
        assert_eq!(cfg.material.power_index, 0.1);
        assert_eq!(cfg.material.poisson_ratio, 0.275);
        assert_eq!(cfg.material.density, 7700.0);
        assert_eq!(cfg.load.axial_load, 10.0);
        assert_eq!(cfg.load.allow_stress, 2.0e8);
        assert_eq!(cfg.load.allow_deflection, 0.03);
        assert_eq!(cfg.turns, 10.0);
        assert_eq!(cfg.practical_k_min, 4.0);
        assert_eq!(cfg.practical_k_max, 12.0);
        assert!(cfg.analyze_geometry.is_none());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# heading\n\n{REFERENCE}\noptions.k = 10 # chosen index\n");
        let cfg = parse_config_str(&text, "test").unwrap();
        assert_eq!(cfg.k, Some(10.0));
    }

    #[test]
    fn negative_stress_limit_is_a_validation_error_naming_the_field() {
        let text = REFERENCE.replace("load.tau_max_MPa   = 200", "load.tau_max_MPa   = -1");
        match parse_config_str(&text, "test") {
            Err(CliError::Validation(e)) => {
                assert!(e.violations.iter().any(|v| v.contains("tau_max")));
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn missing_power_index_is_a_parse_error_naming_the_key() {
        let text = REFERENCE.replace("material.n         = 0.1\n", "");
        match parse_config_str(&text, "test") {
            Err(CliError::Parse { message, .. }) => {
                assert!(message.contains("material.n"), "message: {message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_is_rejected_with_line_number() {
        let text = format!("{REFERENCE}material.youngs = 3\n");
        match parse_config_str(&text, "test") {
            Err(CliError::Parse { line, message, .. }) => {
                assert_eq!(line, 9);
                assert!(message.contains("material.youngs"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_key_is_rejected() {
        let text = format!("{REFERENCE}spring.turns = 12\n");
        assert!(matches!(
            parse_config_str(&text, "test"),
            Err(CliError::Parse { .. })
        ));
    }

    #[test]
    fn all_violations_are_reported_together() {
        let text = REFERENCE
            .replace("load.tau_max_MPa   = 200", "load.tau_max_MPa   = -1")
            .replace("material.rho_kg_m3 = 7700", "material.rho_kg_m3 = 0")
            .replace("spring.turns       = 10", "spring.turns       = 0.5");
        match parse_config_str(&text, "test") {
            Err(CliError::Validation(e)) => assert_eq!(e.violations.len(), 3),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn analyze_geometry_requires_both_diameters() {
        let text = format!("{REFERENCE}spring.D_m = 0.010249\n");
        assert!(matches!(
            parse_config_str(&text, "test"),
            Err(CliError::Validation(_))
        ));
        let both = format!("{REFERENCE}spring.D_m = 0.010249\nspring.d_m = 0.0010249\n");
        let cfg = parse_config_str(&both, "test").unwrap();
        let geom = cfg.analyze_geometry.unwrap();
        assert_eq!(geom.coil_diameter, 0.010249);
        assert_eq!(geom.wire_diameter, 0.0010249);
    }
}
