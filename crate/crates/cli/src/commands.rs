//! The `figure1`, `evolve` and `compare` subcommands as library functions.

use std::path::Path;

use qvn_core::fit::{decay_rate, DecayLaw};
use qvn_core::ion::{pg_from_propagator, rabi_frequency, RabiSum, CHANNEL_ENVELOPE, CHANNEL_PG};
use qvn_core::liouville::{validity_horizon, VALIDITY_THRESHOLD};
use qvn_core::series::TimeSeries;

use crate::config::{state_label, Model, RunConfig};
use crate::error::{CliError, Result};
use crate::io::read_series;

pub const CHANNEL_PG_EMPIRICAL: &str = "pg_empirical";
pub const CHANNEL_PG_QMODEL: &str = "pg_qmodel";
pub const CHANNEL_ENVELOPE_EMPIRICAL: &str = "envelope_empirical";
pub const CHANNEL_ENVELOPE_QMODEL: &str = "envelope_qmodel";

/// Max |Δt| tolerated between the grids of two compared series.
pub const GRID_TOL: f64 = 1e-12;

/// A computed series plus one warning per grid point beyond the validity
/// horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub series: TimeSeries<f64>,
    pub warnings: Vec<String>,
}

/// Empirical and q-model ground-state curves for the chosen panel.
pub fn figure1(cfg: &RunConfig) -> Result<RunOutput> {
    let mut series = TimeSeries::uniform(cfg.t_max, cfg.steps)?;
    let dist = cfg.state.distribution(cfg.ion.dim)?;
    let rabi = RabiSum::new(&dist, &cfg.ion)?;
    series.push_with(CHANNEL_PG_EMPIRICAL, |t| rabi.empirical(&cfg.decay, t))?;
    series.push_with(CHANNEL_PG_QMODEL, |t| rabi.qmodel(cfg.q, t))?;
    series.push_with(CHANNEL_ENVELOPE_EMPIRICAL, |t| rabi.empirical_envelope(&cfg.decay, t))?;
    series.push_with(CHANNEL_ENVELOPE_QMODEL, |t| rabi.qmodel_envelope(cfg.q, t))?;
    finish(series, cfg, "figure1", true)
}

/// Runs the configured model over the configured grid.
pub fn evolve(cfg: &RunConfig) -> Result<RunOutput> {
    let grid = TimeSeries::uniform(cfg.t_max, cfg.steps)?;
    let series = match cfg.propagator() {
        Some(kind) => pg_from_propagator(cfg.state, &cfg.ion, kind, grid.times())?,
        None => {
            let mut series = grid;
            let dist = cfg.state.distribution(cfg.ion.dim)?;
            let rabi = RabiSum::new(&dist, &cfg.ion)?;
            match cfg.model {
                Model::Empirical => {
                    series.push_with(CHANNEL_PG, |t| rabi.empirical(&cfg.decay, t))?;
                    series.push_with(CHANNEL_ENVELOPE, |t| rabi.empirical_envelope(&cfg.decay, t))?;
                }
                _ => {
                    series.push_with(CHANNEL_PG, |t| rabi.qmodel(cfg.q, t))?;
                    series.push_with(CHANNEL_ENVELOPE, |t| rabi.qmodel_envelope(cfg.q, t))?;
                }
            }
            series
        }
    };
    finish(series, cfg, "evolve", cfg.model.uses_q())
}

fn finish(mut series: TimeSeries<f64>, cfg: &RunConfig, command: &str, q_dependent: bool) -> Result<RunOutput> {
    let horizon = if q_dependent {
        validity_horizon(cfg.q, cfg.ion.coupling(), VALIDITY_THRESHOLD).ok()
    } else {
        None
    };
    let warnings: Vec<String> = match horizon {
        Some(h) => series
            .times()
            .iter()
            .filter(|&&t| t > h)
            .map(|&t| {
                format!(
                    "t = {t:e} s exceeds the validity horizon {h:e} s (|1-q|Ωt = {:.4})",
                    cfg.q.excess() * cfg.ion.coupling() * t
                )
            })
            .collect(),
        None => Vec::new(),
    };

    let m = &mut series.metadata;
    m.set("command", command);
    m.set("model", if command == "figure1" { "empirical+qmodel" } else { cfg.model.name() });
    if let Some(p) = cfg.panel {
        m.set("panel", p.name());
    }
    m.set("state", state_label(&cfg.state));
    m.set("initial_p0", cfg.state.distribution(cfg.ion.dim)?.probs()[0]);
    m.set("dim", cfg.ion.dim);
    m.set("q", cfg.q.value());
    m.set("eta", cfg.ion.eta);
    m.set("omega_over_2pi_hz", cfg.ion.omega_over_2pi);
    m.set("coupling_rad_per_s", cfg.ion.coupling());
    m.set("rabi_frequency_0_rad_per_s", rabi_frequency(0, &cfg.ion)?);
    m.set("gamma0_per_s", cfg.decay.gamma0);
    m.set("gamma_exponent", cfg.decay.exponent);
    m.set("tau_s", cfg.tau);
    m.set("t_max_s", cfg.t_max);
    m.set("steps", cfg.steps);
    m.set("validity_threshold", VALIDITY_THRESHOLD);
    m.set(
        "validity_horizon_s",
        horizon.map(|h| h.to_string()).unwrap_or_else(|| "inf".into()),
    );
    if let Some(first) = warnings.first() {
        m.warnings.push(format!("{} grid points beyond the validity horizon; first: {first}", warnings.len()));
    }
    Ok(RunOutput { series, warnings })
}

/// Fitted decay rates of the same channel in two series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateComparison {
    pub law: DecayLaw,
    pub rate_a: f64,
    pub rate_b: f64,
    /// `rate_a / rate_b`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub channel: String,
    pub points: usize,
    pub rms: f64,
    pub max_abs: f64,
    pub t_at_max: f64,
    pub rates: Option<RateComparison>,
}

impl CompareReport {
    pub fn render(&self, color: bool) -> String {
        let (bold, reset) = if color { ("\x1b[1m", "\x1b[0m") } else { ("", "") };
        let mut out = format!("{bold}channel{reset}: {}\n", self.channel);
        out += &format!("{bold}points{reset}: {}\n", self.points);
        out += &format!("{bold}rms_difference{reset}: {:e}\n", self.rms);
        out += &format!("{bold}max_abs_difference{reset}: {:e}\n", self.max_abs);
        out += &format!("{bold}t_at_max_s{reset}: {:e}\n", self.t_at_max);
        if let Some(r) = &self.rates {
            let law = match r.law {
                DecayLaw::Exponential => "exponential",
                DecayLaw::Gaussian => "gaussian",
            };
            out += &format!("{bold}fit{reset}: {law}\n");
            out += &format!("{bold}rate_a{reset}: {:e}\n", r.rate_a);
            out += &format!("{bold}rate_b{reset}: {:e}\n", r.rate_b);
            out += &format!("{bold}rate_ratio{reset}: {:.12}\n", r.ratio);
        }
        out
    }
}

/// Compares `channel` between two series on identical grids.
pub fn compare_series(
    a: &TimeSeries<f64>,
    b: &TimeSeries<f64>,
    channel: &str,
    fit: Option<DecayLaw>,
) -> Result<CompareReport> {
    if a.len() != b.len() {
        return Err(CliError::GridMismatch(format!("{} vs {} points", a.len(), b.len())));
    }
    if let Some((i, (ta, tb))) = a
        .times()
        .iter()
        .zip(b.times())
        .enumerate()
        .find(|(_, (ta, tb))| (*ta - *tb).abs() > GRID_TOL)
    {
        return Err(CliError::GridMismatch(format!("row {i}: t = {ta:e} vs {tb:e}")));
    }
    let missing = |which: &str| CliError::Validation(format!("channel `{channel}` not found in series {which}"));
    let va = a.channel(channel).ok_or_else(|| missing("a"))?;
    let vb = b.channel(channel).ok_or_else(|| missing("b"))?;
    if va.is_empty() {
        return Err(CliError::Validation("series are empty".into()));
    }

    let mut sum_sq = 0.0;
    let (mut max_abs, mut t_at_max) = (0.0, a.times()[0]);
    for ((x, y), t) in va.iter().zip(vb).zip(a.times()) {
        let d = (x - y).abs();
        sum_sq += d * d;
        if d > max_abs {
            max_abs = d;
            t_at_max = *t;
        }
    }
    let rates = match fit {
        None => None,
        Some(law) => {
            let rate_a = decay_rate(a.times(), va, law)?;
            let rate_b = decay_rate(b.times(), vb, law)?;
            Some(RateComparison { law, rate_a, rate_b, ratio: rate_a / rate_b })
        }
    };
    Ok(CompareReport {
        channel: channel.to_string(),
        points: va.len(),
        rms: (sum_sq / va.len() as f64).sqrt(),
        max_abs,
        t_at_max,
        rates,
    })
}

/// Reads two files and compares `channel`.
pub fn compare_files(a: &Path, b: &Path, channel: &str, fit: Option<DecayLaw>) -> Result<CompareReport> {
    compare_series(&read_series(a)?, &read_series(b)?, channel, fit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(values: Vec<f64>) -> TimeSeries<f64> {
        let mut s = TimeSeries::uniform(1.0, values.len()).unwrap();
        s.push_channel("x", values).unwrap();
        s
    }

    #[test]
    fn self_comparison_is_zero() {
        let s = series(vec![0.1, 0.5, 0.9, 0.2]);
        let r = compare_series(&s, &s, "x", None).unwrap();
        assert_eq!(r.rms, 0.0);
        assert_eq!(r.max_abs, 0.0);
    }

    #[test]
    fn constant_offset() {
        let a = series(vec![0.1, 0.5, 0.9, 0.2]);
        let b = series(vec![0.2, 0.6, 1.0, 0.3]);
        let r = compare_series(&a, &b, "x", None).unwrap();
        assert!((r.rms - 0.1).abs() < 1e-15);
        assert!((r.max_abs - 0.1).abs() < 1e-15);
    }

    #[test]
    fn grid_and_channel_mismatch() {
        let a = series(vec![0.0; 4]);
        let b = series(vec![0.0; 5]);
        assert!(matches!(compare_series(&a, &b, "x", None), Err(CliError::GridMismatch(_))));
        let mut c = TimeSeries::new(vec![0.0, 0.25, 0.5, 1.0 + 1e-9]).unwrap();
        c.push_channel("x", vec![0.0; 4]).unwrap();
        assert!(matches!(compare_series(&a, &c, "x", None), Err(CliError::GridMismatch(_))));
        assert!(matches!(compare_series(&a, &a, "y", None), Err(CliError::Validation(_))));
    }
}
