//! Plain-text run configuration: one `key = value` per line, `#` comments.
//!
//! Energies are in eV, temperatures in K, fields in kV/cm and distances in nm.
//! Unknown keys are rejected, and every problem in the file is reported at
//! once rather than stopping at the first.

use std::collections::HashMap;
use std::fmt;

use qdm_rf::peaks::{DEFAULT_ENERGY_TOL, DEFAULT_INTENSITY_FLOOR};
use qdm_rf::{
    delta_from_field, Axis, BroadeningModel, DriveParams, EmitterParams, GridSpec, SweepRange,
};

pub const KEYS: &[&str] = &[
    "e_xd_ev",
    "e0_ev",
    "hw_l_ev",
    "g_ev",
    "n",
    "g_sqrt_n_ev",
    "t_ev",
    "delta_ev",
    "mu",
    "d_nm",
    "field_kv_per_cm",
    "delta_zero_field_ev",
    "gamma0_ev",
    "a_ev_per_k",
    "b_ev",
    "delta_e_ev",
    "gamma_rad_ev",
    "temp_k",
    "dp_min_ev",
    "dp_max_ev",
    "npoints",
    "sweep_lo",
    "sweep_hi",
    "sweep_steps",
    "energy_tol_ev",
    "intensity_floor",
];

/// A single problem found while reading a config.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigIssue {
    /// 1-based line number, when the problem belongs to one line.
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfigError {
    pub issues: Vec<ConfigIssue>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        write!(f, "invalid config: {}", parts.join("; "))
    }
}

impl std::error::Error for ConfigError {}

/// How the splitting was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SplittingSource {
    Direct,
    /// Tuned from `delta_zero_field` by a bias field (kV/cm).
    Field { delta_zero_field: f64, field: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub emitter: EmitterParams,
    pub drive: DriveParams,
    pub model: BroadeningModel,
    pub temp_k: f64,
    pub grid: GridSpec,
    /// Sweep bounds as given; their unit depends on the sweep axis.
    pub sweep: SweepRange,
    pub energy_tol: f64,
    pub intensity_floor: f64,
    pub splitting: SplittingSource,
}

impl RunConfig {
    /// Splitting at zero bias field, the template for field sweeps.
    pub fn zero_field_delta(&self) -> f64 {
        match self.splitting {
            SplittingSource::Direct => self.emitter.delta,
            SplittingSource::Field {
                delta_zero_field, ..
            } => delta_zero_field,
        }
    }

    /// Applies command-line overrides and revalidates the affected values.
    pub fn with_overrides(mut self, temp: Option<f64>, delta: Option<f64>) -> Result<Self, ConfigError> {
        let mut issues = Vec::new();
        if let Some(t) = temp {
            if t >= 0.0 && t.is_finite() {
                self.temp_k = t;
            } else {
                issues.push(issue(None, format!("--temp must be a non-negative temperature, got {t}")));
            }
        }
        if let Some(d) = delta {
            if d.is_finite() {
                self.emitter.delta = d;
                self.splitting = SplittingSource::Direct;
            } else {
                issues.push(issue(None, format!("--delta must be finite, got {d}")));
            }
        }
        if issues.is_empty() {
            Ok(self)
        } else {
            Err(ConfigError { issues })
        }
    }

    /// The configured sweep on the requested axis.
    pub fn sweep_on(&self, axis: Axis) -> SweepRange {
        SweepRange { axis, ..self.sweep }
    }

    /// Emitter used as a sweep template; for field sweeps its `delta` is the
    /// zero-field splitting.
    pub fn sweep_template(&self, axis: Axis) -> EmitterParams {
        match axis {
            Axis::Field => self.emitter.with_delta(self.zero_field_delta()),
            _ => self.emitter,
        }
    }
}

fn issue(line: Option<usize>, message: impl Into<String>) -> ConfigIssue {
    ConfigIssue {
        line,
        message: message.into(),
    }
}

struct Entries {
    values: HashMap<&'static str, (usize, String)>,
    issues: Vec<ConfigIssue>,
}

impl Entries {
    fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    fn line(&self, key: &str) -> Option<usize> {
        self.values.get(key).map(|v| v.0)
    }

    fn float(&mut self, key: &'static str) -> Option<f64> {
        let (line, raw) = self.values.get(key)?.clone();
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            Ok(_) => {
                self.issues
                    .push(issue(Some(line), format!("{key}: value must be finite, got '{raw}'")));
                None
            }
            Err(_) => {
                self.issues
                    .push(issue(Some(line), format!("{key}: malformed number '{raw}'")));
                None
            }
        }
    }

    fn float_or(&mut self, key: &'static str, default: f64) -> f64 {
        if self.has(key) {
            self.float(key).unwrap_or(default)
        } else {
            default
        }
    }

    fn required(&mut self, key: &'static str) -> f64 {
        if !self.has(key) {
            self.issues.push(issue(None, format!("missing required key {key}")));
            return f64::NAN;
        }
        self.float(key).unwrap_or(f64::NAN)
    }

    fn integer_or(&mut self, key: &'static str, default: u64) -> u64 {
        let Some((line, raw)) = self.values.get(key).cloned() else {
            return default;
        };
        match raw.parse::<u64>() {
            Ok(v) => v,
            Err(_) => {
                self.issues.push(issue(
                    Some(line),
                    format!("{key}: malformed non-negative integer '{raw}'"),
                ));
                default
            }
        }
    }

    /// Records a constraint violation unless the value is already known bad.
    fn check(&mut self, key: &'static str, value: f64, ok: bool, constraint: &str) {
        if value.is_nan() || ok {
            return;
        }
        let line = self.line(key);
        self.issues.push(issue(
            line,
            format!("{key} = {value} violates constraint: must be {constraint}"),
        ));
    }
}

/// Parses and validates a config file body.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut entries = Entries {
        values: HashMap::new(),
        issues: Vec::new(),
    };

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw_line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some((k, v)) = body.split_once('=') else {
            entries
                .issues
                .push(issue(Some(line_no), format!("expected 'key = value', got '{body}'")));
            continue;
        };
        let (k, v) = (k.trim(), v.trim());
        let Some(key) = KEYS.iter().copied().find(|known| *known == k) else {
            entries
                .issues
                .push(issue(Some(line_no), format!("unknown key '{k}'")));
            continue;
        };
        if let Some((first, _)) = entries.values.get(key) {
            let msg = format!("duplicate key {key} (first set on line {first})");
            entries.issues.push(issue(Some(line_no), msg));
            continue;
        }
        entries.values.insert(key, (line_no, v.to_string()));
    }

    let e_xd = entries.required("e_xd_ev");
    let hw_l = entries.required("hw_l_ev");
    let t = entries.required("t_ev");
    let e0 = entries.float_or("e0_ev", 0.0);
    let mu = entries.float_or("mu", 1.0);
    let d_nm = entries.float_or("d_nm", 10.0);

    // coupling: g·√n directly, or g together with n
    let n = entries.integer_or("n", 100);
    let rabi = match (entries.has("g_sqrt_n_ev"), entries.has("g_ev")) {
        (true, true) => {
            let line = entries.line("g_ev");
            entries.issues.push(issue(
                line,
                "conflicting coupling specification: give either g_sqrt_n_ev or g_ev with n",
            ));
            f64::NAN
        }
        (true, false) => {
            let r = entries.float("g_sqrt_n_ev").unwrap_or(f64::NAN);
            entries.check("g_sqrt_n_ev", r, r >= 0.0, ">= 0");
            r
        }
        (false, true) => {
            if !entries.has("n") {
                let line = entries.line("g_ev");
                entries.issues.push(issue(line, "g_ev requires the photon number n"));
            }
            let g = entries.float("g_ev").unwrap_or(f64::NAN);
            entries.check("g_ev", g, g >= 0.0, ">= 0");
            g * (n as f64).sqrt()
        }
        (false, false) => {
            entries
                .issues
                .push(issue(None, "missing required coupling: g_sqrt_n_ev, or g_ev with n"));
            f64::NAN
        }
    };

    // splitting: direct, or tuned by a bias field
    let delta_direct = entries.has("delta_ev").then(|| entries.float("delta_ev")).flatten();
    let zero_field = entries
        .has("delta_zero_field_ev")
        .then(|| entries.float("delta_zero_field_ev"))
        .flatten();
    let field = entries
        .has("field_kv_per_cm")
        .then(|| entries.float("field_kv_per_cm"))
        .flatten();
    let mut splitting = SplittingSource::Direct;
    let delta = if entries.has("field_kv_per_cm") || entries.has("delta_zero_field_ev") {
        if entries.has("delta_ev") {
            let line = entries.line("delta_ev");
            entries.issues.push(issue(
                line,
                "conflicting splitting specification: delta_ev together with field tuning keys",
            ));
        }
        if entries.has("field_kv_per_cm") && !entries.has("delta_zero_field_ev") {
            let line = entries.line("field_kv_per_cm");
            entries
                .issues
                .push(issue(line, "field_kv_per_cm requires delta_zero_field_ev"));
        }
        match zero_field {
            Some(d0) => {
                let f = field.unwrap_or(0.0);
                splitting = SplittingSource::Field {
                    delta_zero_field: d0,
                    field: f,
                };
                if d_nm > 0.0 {
                    delta_from_field(d0, d_nm, f)
                } else {
                    f64::NAN
                }
            }
            None => f64::NAN,
        }
    } else {
        delta_direct.unwrap_or(0.008)
    };

    let gamma0 = entries.float_or("gamma0_ev", 75e-6);
    let a_coef = entries.float_or("a_ev_per_k", 22e-6);
    let b_coef = entries.float_or("b_ev", 0.0);
    let delta_e = entries.float_or("delta_e_ev", 0.036);
    let gamma_rad = entries.float_or("gamma_rad_ev", 75e-6);
    let temp_k = entries.float_or("temp_k", 0.0);
    let dp_min = entries.float_or("dp_min_ev", -0.35);
    let dp_max = entries.float_or("dp_max_ev", 0.35);
    let npoints = entries.integer_or("npoints", 7001);
    let sweep_lo = entries.float_or("sweep_lo", 0.0);
    let sweep_hi = entries.float_or("sweep_hi", 0.06);
    let sweep_steps = entries.integer_or("sweep_steps", 241);
    let energy_tol = entries.float_or("energy_tol_ev", DEFAULT_ENERGY_TOL);
    let intensity_floor = entries.float_or("intensity_floor", DEFAULT_INTENSITY_FLOOR);

    entries.check("t_ev", t, t >= 0.0, ">= 0 (tunneling is non-negative)");
    entries.check("hw_l_ev", hw_l, hw_l > 0.0, "> 0");
    entries.check("mu", mu, mu > 0.0, "> 0");
    entries.check("d_nm", d_nm, d_nm > 0.0, "> 0");
    if n < 1 {
        let line = entries.line("n");
        entries
            .issues
            .push(issue(line, "n = 0 violates constraint: must be >= 1"));
    }
    entries.check("gamma0_ev", gamma0, gamma0 > 0.0, "> 0");
    entries.check("a_ev_per_k", a_coef, a_coef >= 0.0, ">= 0");
    entries.check("b_ev", b_coef, b_coef >= 0.0, ">= 0");
    if b_coef > 0.0 {
        entries.check("delta_e_ev", delta_e, delta_e > 0.0, "> 0 when b_ev > 0");
    }
    entries.check("gamma_rad_ev", gamma_rad, gamma_rad > 0.0, "> 0");
    entries.check("temp_k", temp_k, temp_k >= 0.0, ">= 0");
    entries.check("dp_max_ev", dp_max, dp_max > dp_min, "> dp_min_ev");
    if npoints < 2 {
        let line = entries.line("npoints");
        entries
            .issues
            .push(issue(line, format!("npoints = {npoints} violates constraint: must be >= 2")));
    }
    entries.check("sweep_hi", sweep_hi, sweep_hi > sweep_lo, "> sweep_lo");
    if sweep_steps < 2 {
        let line = entries.line("sweep_steps");
        entries.issues.push(issue(
            line,
            format!("sweep_steps = {sweep_steps} violates constraint: must be >= 2"),
        ));
    }
    entries.check("energy_tol_ev", energy_tol, energy_tol > 0.0, "> 0");
    entries.check(
        "intensity_floor",
        intensity_floor,
        (0.0..1.0).contains(&intensity_floor),
        "in [0, 1)",
    );

    if !entries.issues.is_empty() {
        entries.issues.sort_by_key(|i| i.line.unwrap_or(usize::MAX));
        return Err(ConfigError {
            issues: entries.issues,
        });
    }

    Ok(RunConfig {
        emitter: EmitterParams {
            e_xd,
            delta,
            t,
            mu,
            d: d_nm,
            e0,
        },
        drive: DriveParams::from_rabi(rabi, n, hw_l),
        model: BroadeningModel {
            gamma0,
            a_coef,
            b_coef,
            delta_e,
            gamma_rad,
        },
        temp_k,
        grid: GridSpec::new(dp_min, dp_max, npoints as usize),
        sweep: SweepRange {
            lo: sweep_lo,
            hi: sweep_hi,
            steps: sweep_steps as usize,
            axis: Axis::Delta,
        },
        energy_tol,
        intensity_floor,
        splitting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASELINE: &str = "\
# seven-peak molecule
n = 100
g_sqrt_n_ev = 0.1
t_ev = 0.1
e_xd_ev = 1
hw_l_ev = 1
";

    #[test]
    fn baseline_file_gets_defaults() {
        let c = parse_config(BASELINE).unwrap();
        assert_eq!(c.emitter.delta, 0.008);
        assert_eq!(c.emitter.e0, 0.0);
        assert!((c.drive.rabi() - 0.1).abs() < 1e-15);
        assert_eq!(c.drive.n, 100);
        assert_eq!(c.model, BroadeningModel::default());
        assert_eq!(c.grid, GridSpec::new(-0.35, 0.35, 7001));
        assert_eq!(c.sweep, SweepRange::default_delta());
        assert_eq!(c.temp_k, 0.0);
        assert_eq!(c.energy_tol, 1e-6);
        assert_eq!(c.intensity_floor, 1e-3);
    }

    #[test]
    fn negative_tunneling_is_named() {
        let err = parse_config(&BASELINE.replace("t_ev = 0.1", "t_ev = -0.1")).unwrap_err();
        assert_eq!(err.issues.len(), 1);
        assert_eq!(err.issues[0].line, Some(4));
        assert!(err.issues[0].message.contains("t_ev"));
        assert!(err.issues[0].message.contains(">= 0"));
    }

    #[test]
    fn conflicting_coupling() {
        let err = parse_config(&format!("{BASELINE}g_ev = 0.01\n")).unwrap_err();
        assert!(err.to_string().contains("conflicting coupling specification"));
    }

    #[test]
    fn g_with_n_works() {
        let text = BASELINE.replace("g_sqrt_n_ev = 0.1", "g_ev = 0.01");
        let c = parse_config(&text).unwrap();
        assert!((c.drive.rabi() - 0.1).abs() < 1e-15);
        let err = parse_config(&text.replace("n = 100\n", "")).unwrap_err();
        assert!(err.to_string().contains("requires the photon number"));
    }

    #[test]
    fn reports_every_problem() {
        let text = "e_xd_ev = 1\nhw_l_ev = abc\nt_ev = -1\ncolour = red\nnpoints = 1\nno equals sign\n";
        let err = parse_config(text).unwrap_err();
        let lines: Vec<Option<usize>> = err.issues.iter().map(|i| i.line).collect();
        assert!(lines.contains(&Some(2)), "{err}");
        assert!(lines.contains(&Some(3)));
        assert!(lines.contains(&Some(4)));
        assert!(lines.contains(&Some(5)));
        assert!(lines.contains(&Some(6)));
        // missing coupling has no line
        assert!(lines.contains(&None));
    }

    #[test]
    fn unknown_and_duplicate_keys() {
        let err = parse_config(&format!("{BASELINE}tee_ev = 0.1\nt_ev = 0.2\n")).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("unknown key 'tee_ev'"));
        assert!(text.contains("duplicate key t_ev"));
    }

    #[test]
    fn field_tuning_sets_delta() {
        let c = parse_config(&format!(
            "{BASELINE}delta_zero_field_ev = 0.05\nd_nm = 10\nfield_kv_per_cm = 50\n"
        ))
        .unwrap();
        assert!(c.emitter.delta.abs() < 1e-15);
        assert_eq!(c.zero_field_delta(), 0.05);
        let err = parse_config(&format!("{BASELINE}delta_ev = 0.0\nfield_kv_per_cm = 50\n")).unwrap_err();
        assert_eq!(err.issues.len(), 2, "{err}");
    }

    #[test]
    fn overrides() {
        let c = parse_config(BASELINE).unwrap().with_overrides(Some(20.0), Some(0.0)).unwrap();
        assert_eq!(c.temp_k, 20.0);
        assert_eq!(c.emitter.delta, 0.0);
        assert!(parse_config(BASELINE).unwrap().with_overrides(Some(-1.0), None).is_err());
    }

    #[test]
    fn inline_comments_and_blank_lines() {
        let c = parse_config(&format!("\n\n{BASELINE}temp_k = 5 # heated\n   # nothing\n")).unwrap();
        assert_eq!(c.temp_k, 5.0);
    }
}
