use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qvn_cli::commands::{self, RunOutput};
use qvn_cli::config::{Command as RunCommand, RunConfig, Settings};
use qvn_cli::{io, use_color, CliError};
use qvn_core::fit::DecayLaw;

/// Nonextensive density-operator dynamics and trapped-ion Rabi curves.
#[derive(Parser)]
#[command(name = "qvn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Empirical vs q-model ground-state curves (panel a: vacuum, b: coherent n̄ = 3).
    Figure1 {
        /// a or b
        #[arg(long)]
        panel: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run one model over a uniform time grid.
    Evolve {
        /// empirical | qmodel | unitary | qexp | qshort | milburn
        #[arg(long)]
        model: Option<String>,
        /// fock:N | coherent:NBAR | vacuum
        #[arg(long)]
        state: Option<String>,
        /// Milburn time step in µs
        #[arg(long = "tau-us")]
        tau_us: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compare one channel of two series files on identical grids.
    Compare {
        series_a: PathBuf,
        series_b: PathBuf,
        #[arg(long)]
        channel: String,
        /// Also fit the channel as a decay envelope and report rate_a / rate_b.
        #[arg(long)]
        fit: Option<FitLaw>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FitLaw {
    Exponential,
    Gaussian,
}

#[derive(Args)]
struct RunArgs {
    /// key = value configuration file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    eta: Option<String>,
    /// Ω/2π in kHz
    #[arg(long = "omega-khz")]
    omega_khz: Option<String>,
    /// γ_0 in kHz (10³ s⁻¹)
    #[arg(long = "gamma0-khz")]
    gamma0_khz: Option<String>,
    #[arg(long)]
    exponent: Option<String>,
    /// Final time in µs
    #[arg(long = "tmax-us")]
    tmax_us: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    /// Fock truncation
    #[arg(long)]
    dim: Option<String>,
    /// Output path; stdout when omitted or `-`
    #[arg(long)]
    out: Option<String>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
}

impl RunArgs {
    fn settings(&self, extra: &[(&str, &Option<String>)]) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => Settings::from_file(path)?,
            None => Settings::default(),
        };
        let flags = [
            ("q", &self.q),
            ("eta", &self.eta),
            ("omega-khz", &self.omega_khz),
            ("gamma0-khz", &self.gamma0_khz),
            ("exponent", &self.exponent),
            ("tmax-us", &self.tmax_us),
            ("steps", &self.steps),
            ("dim", &self.dim),
            ("out", &self.out),
            ("format", &self.format),
        ];
        for (key, value) in flags.iter().chain(extra) {
            if let Some(v) = value {
                s.set_flag(key, v.clone());
            }
        }
        Ok(s)
    }
}

fn emit(output: RunOutput, cfg: &RunConfig) -> Result<(), CliError> {
    for w in &output.warnings {
        eprintln!("warning: {w}");
    }
    io::write_series(&output.series, cfg.format, cfg.out.as_deref())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Figure1 { panel, run } => {
            let settings = run.settings(&[("panel", &panel)])?;
            let cfg = RunConfig::resolve(&settings, RunCommand::Figure1)?;
            emit(commands::figure1(&cfg)?, &cfg)
        }
        Command::Evolve { model, state, tau_us, run } => {
            let settings = run.settings(&[("model", &model), ("state", &state), ("tau-us", &tau_us)])?;
            let cfg = RunConfig::resolve(&settings, RunCommand::Evolve)?;
            emit(commands::evolve(&cfg)?, &cfg)
        }
        Command::Compare { series_a, series_b, channel, fit } => {
            let law = fit.map(|f| match f {
                FitLaw::Exponential => DecayLaw::Exponential,
                FitLaw::Gaussian => DecayLaw::Gaussian,
            });
            let report = commands::compare_files(&series_a, &series_b, &channel, law)?;
            print!("{}", report.render(use_color()));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
