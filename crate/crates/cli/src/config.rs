//! Run configuration: flat `key = value` files overridden by command-line
//! flags, converted to SI units as soon as they are read.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qvn_core::ion::{EmpiricalDecay, InitialVibrationalState, IonConfig};
use qvn_core::liouville::{validity_horizon, PropagatorKind};
use qvn_core::quantum::Extensivity;

use crate::error::{CliError, Result};

/// Keys accepted in config files; flags use the same names with `--`.
pub const KEYS: &[&str] = &[
    "model", "state", "panel", "q", "eta", "omega-khz", "gamma0-khz", "exponent", "tau-us", "tmax-us", "steps", "dim",
    "out", "format",
];

/// `|1-q| Ω t_max` used to size the default time window.
pub const FIGURE_WINDOW: f64 = 0.17;

/// Where a setting came from, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    File { path: PathBuf, line: usize },
    Flag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Setting {
    pub value: String,
    pub origin: Origin,
}

/// Raw settings keyed by name; later insertions override earlier ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    entries: BTreeMap<String, Setting>,
}

impl Settings {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut settings = Settings::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(CliError::Validation(format!(
                    "{}:{line}: expected `key = value`, got `{content}`",
                    path.display()
                )));
            };
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::Validation(format!("{}:{line}: unknown key `{key}`", path.display())));
            }
            let origin = Origin::File { path: path.to_path_buf(), line };
            settings.entries.insert(key.to_string(), Setting { value: value.trim().to_string(), origin });
        }
        Ok(settings)
    }

    /// Sets `key` from a command-line flag, overriding any file value.
    pub fn set_flag(&mut self, key: &str, value: impl Into<String>) {
        debug_assert!(KEYS.contains(&key), "unknown key {key}");
        self.entries.insert(key.to_string(), Setting { value: value.into(), origin: Origin::Flag });
    }

    pub fn contains(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    fn raw(&self, key: &str) -> Option<&Setting> {
        self.entries.get(key)
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s.value.parse().map(Some).map_err(|_| invalid(key, s, "cannot parse value")),
        }
    }

    fn number(&self, key: &str, default: f64) -> Result<f64> {
        let v = self.parsed::<f64>(key)?.unwrap_or(default);
        if !v.is_finite() {
            return Err(self.error(key, "must be finite"));
        }
        Ok(v)
    }

    fn error(&self, key: &str, reason: &str) -> CliError {
        match self.raw(key) {
            Some(s) => invalid(key, s, reason),
            None => CliError::Validation(format!("field `{key}` (default): {reason}")),
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::File { path, line } => write!(f, "{}:{line}", path.display()),
            Origin::Flag => write!(f, "command line"),
        }
    }
}

fn invalid(key: &str, s: &Setting, reason: &str) -> CliError {
    CliError::Validation(format!("{}: field `{key}` = `{}`: {reason}", s.origin, s.value))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Empirical,
    QModel,
    Unitary,
    QExp,
    QShort,
    Milburn,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Empirical => "empirical",
            Model::QModel => "qmodel",
            Model::Unitary => "unitary",
            Model::QExp => "qexp",
            Model::QShort => "qshort",
            Model::Milburn => "milburn",
        }
    }

    /// Whether the model depends on `q` (and therefore has a validity window).
    pub fn uses_q(self) -> bool {
        matches!(self, Model::QModel | Model::QExp | Model::QShort)
    }
}

impl FromStr for Model {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Ok(match s {
            "empirical" => Model::Empirical,
            "qmodel" => Model::QModel,
            "unitary" => Model::Unitary,
            "qexp" => Model::QExp,
            "qshort" => Model::QShort,
            "milburn" => Model::Milburn,
            _ => return Err(()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Panel {
    A,
    B,
}

impl Panel {
    pub fn state(self) -> InitialVibrationalState<f64> {
        match self {
            Panel::A => InitialVibrationalState::Fock(0),
            Panel::B => InitialVibrationalState::Coherent(3.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Panel::A => "a",
            Panel::B => "b",
        }
    }
}

impl FromStr for Panel {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "a" | "A" => Ok(Panel::A),
            "b" | "B" => Ok(Panel::B),
            _ => Err(()),
        }
    }
}

/// `fock:N`, `coherent:NBAR` or `vacuum`.
pub fn parse_state(s: &str) -> Option<InitialVibrationalState<f64>> {
    if s == "vacuum" {
        return Some(InitialVibrationalState::Fock(0));
    }
    let (kind, arg) = s.split_once(':')?;
    match kind.trim() {
        "fock" => arg.trim().parse().ok().map(InitialVibrationalState::Fock),
        "coherent" => {
            let nbar: f64 = arg.trim().parse().ok()?;
            (nbar.is_finite() && nbar >= 0.0).then_some(InitialVibrationalState::Coherent(nbar))
        }
        _ => None,
    }
}

pub fn state_label(state: &InitialVibrationalState<f64>) -> String {
    match state {
        InitialVibrationalState::Fock(n) => format!("fock:{n}"),
        InitialVibrationalState::Coherent(nbar) => format!("coherent:{nbar}"),
    }
}

/// Fully resolved run parameters in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: Model,
    pub panel: Option<Panel>,
    pub ion: IonConfig<f64>,
    pub state: InitialVibrationalState<f64>,
    pub q: Extensivity<f64>,
    pub decay: EmpiricalDecay<f64>,
    /// Milburn time step in seconds.
    pub tau: f64,
    /// Seconds.
    pub t_max: f64,
    pub steps: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
}

/// Which command the settings are resolved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Figure1,
    Evolve,
}

impl RunConfig {
    pub fn resolve(settings: &Settings, command: Command) -> Result<Self> {
        let panel = match command {
            Command::Figure1 => {
                if settings.contains("model") || settings.contains("state") {
                    let key = if settings.contains("model") { "model" } else { "state" };
                    return Err(settings.error(key, "not configurable for figure1 (use panel)"));
                }
                let p = settings.parsed::<String>("panel")?.unwrap_or_else(|| "a".into());
                Some(p.parse::<Panel>().map_err(|_| settings.error("panel", "expected a or b"))?)
            }
            Command::Evolve => {
                if settings.contains("panel") {
                    return Err(settings.error("panel", "only valid for figure1"));
                }
                None
            }
        };
        let model = match command {
            Command::Figure1 => Model::QModel,
            Command::Evolve => match settings.parsed::<String>("model")? {
                None => Model::QModel,
                Some(m) => m
                    .parse()
                    .map_err(|_| settings.error("model", "expected empirical|qmodel|unitary|qexp|qshort|milburn"))?,
            },
        };
        let state = match (panel, settings.parsed::<String>("state")?) {
            (Some(p), _) => p.state(),
            (None, None) => InitialVibrationalState::Fock(0),
            (None, Some(s)) => parse_state(&s).ok_or_else(|| settings.error("state", "expected fock:N, coherent:NBAR or vacuum"))?,
        };

        let defaults = IonConfig::<f64>::figure1();
        let omega_khz = settings.number("omega-khz", defaults.omega_over_2pi / 1e3)?;
        if omega_khz <= 0.0 {
            return Err(settings.error("omega-khz", "must be positive"));
        }
        let eta = settings.number("eta", defaults.eta)?;
        if !(eta > 0.0 && eta < 1.0) {
            return Err(settings.error("eta", "must lie in (0, 1)"));
        }
        let dim = settings.parsed::<usize>("dim")?.unwrap_or(defaults.dim);
        if dim == 0 {
            return Err(settings.error("dim", "must be at least 1"));
        }
        let ion = IonConfig::new(omega_khz * 1e3, eta, dim)?;

        let q = settings.number("q", 1.001)?;
        let q = Extensivity::evolution(q).map_err(|_| settings.error("q", "must be >= 1"))?;
        let fig_decay = EmpiricalDecay::<f64>::figure1();
        let gamma0_khz = settings.number("gamma0-khz", fig_decay.gamma0 / 1e3)?;
        if gamma0_khz < 0.0 {
            return Err(settings.error("gamma0-khz", "must be nonnegative"));
        }
        let exponent = settings.number("exponent", fig_decay.exponent)?;
        let decay = EmpiricalDecay::new(gamma0_khz * 1e3, exponent)?;
        let tau_us = settings.number("tau-us", 0.0)?;
        if tau_us < 0.0 {
            return Err(settings.error("tau-us", "must be nonnegative"));
        }

        let t_max = match settings.parsed::<f64>("tmax-us")? {
            Some(us) => {
                if !(us > 0.0 && us.is_finite()) {
                    return Err(settings.error("tmax-us", "must be positive"));
                }
                us * 1e-6
            }
            None => default_t_max(q, ion.coupling()),
        };
        let steps = settings.parsed::<usize>("steps")?.unwrap_or(2000);
        if steps < 2 {
            return Err(settings.error("steps", "must be at least 2"));
        }
        let out = settings.parsed::<String>("out")?.filter(|s| s != "-").map(PathBuf::from);
        let format = match settings.parsed::<String>("format")? {
            None => out.as_deref().map(format_from_extension).unwrap_or_default(),
            Some(f) => f.parse().map_err(|_| settings.error("format", "expected csv or json"))?,
        };

        Ok(RunConfig {
            model,
            panel,
            ion,
            state,
            q,
            decay,
            tau: tau_us * 1e-6,
            t_max,
            steps,
            out,
            format,
        })
    }

    /// Propagator matching the model, for the propagator-backed models.
    pub fn propagator(&self) -> Option<PropagatorKind<f64>> {
        match self.model {
            Model::Unitary => Some(PropagatorKind::Unitary),
            Model::QExp => Some(PropagatorKind::QExponential(self.q)),
            Model::QShort => Some(PropagatorKind::QShortTime(self.q)),
            Model::Milburn => Some(PropagatorKind::Milburn { tau: self.tau }),
            Model::Empirical | Model::QModel => None,
        }
    }
}

/// The window `|1-q| Ω t_max = 0.17`, or 54 µs in the unitary limit.
pub fn default_t_max(q: Extensivity<f64>, coupling: f64) -> f64 {
    validity_horizon(q, coupling, FIGURE_WINDOW).unwrap_or(54e-6)
}

pub fn format_from_extension(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Csv,
    }
}
