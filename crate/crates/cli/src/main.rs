use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdm_rf::{Axis, Workers};
use qdm_rf_cli::commands::{load_config, open_output};
use qdm_rf_cli::plot::PlotKind;
use qdm_rf_cli::{run_compute, run_plot, CliError, Compute, RunOptions};

/// Resonance fluorescence spectra of a laser-driven double quantum dot.
#[derive(Parser, Debug)]
#[command(name = "qdm-rf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Run configuration (`key = value` lines).
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Temperature in K, overrides temp_k.
    #[arg(long)]
    temp: Option<f64>,
    /// Exciton splitting in eV, overrides delta_ev and field tuning.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Sweep axis; sweep_lo/sweep_hi are in eV for delta and kV/cm for field.
    #[arg(long, value_enum, default_value_t = SweepAxis::Delta)]
    axis: SweepAxis,
    /// Worker threads for row evaluation (1 runs inline).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SweepAxis {
    Delta,
    Field,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Line,
    Heatmap,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sampled spectrum S(Δ′): delta_prime_ev,intensity
    Spectrum(Common),
    /// The nine dressed-state transitions
    Transitions(Common),
    /// Distinct line positions after clustering and the intensity floor
    Peaks(Common),
    /// Dressed energies along the sweep: delta_ev,e1_ev,e2_ev,e3_ev
    Curves {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Transition energies along the sweep (long form)
    Branches {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Intensity map S(Δ′, Δ), Δ-major
    Map {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Spectra at several temperatures: temp_k,delta_prime_ev,intensity
    Tempseries {
        #[command(flatten)]
        common: Common,
        /// Comma-separated temperatures in K.
        #[arg(long, value_delimiter = ',', default_value = "5,20,40")]
        temps: Vec<f64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Render a CSV table as SVG
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn compute(cmd: Compute, common: Common, axis: SweepAxis, jobs: Option<usize>) -> Result<(), CliError> {
    let config = load_config(&common.config)?;
    let opts = RunOptions {
        temp: common.temp,
        delta: common.delta,
        axis: match axis {
            SweepAxis::Delta => Axis::Delta,
            SweepAxis::Field => Axis::Field,
        },
        workers: jobs.map(Workers).unwrap_or_default(),
    };
    let out = open_output(common.out.as_deref())?;
    run_compute(&cmd, config, &opts, out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum(c) => compute(Compute::Spectrum, c, SweepAxis::Delta, None),
        Command::Transitions(c) => compute(Compute::Transitions, c, SweepAxis::Delta, None),
        Command::Peaks(c) => compute(Compute::Peaks, c, SweepAxis::Delta, None),
        Command::Curves { common, sweep } => compute(Compute::Curves, common, sweep.axis, sweep.jobs),
        Command::Branches { common, sweep } => {
            compute(Compute::Branches, common, sweep.axis, sweep.jobs)
        }
        Command::Map { common, sweep } => compute(Compute::Map, common, sweep.axis, sweep.jobs),
        Command::Tempseries { common, temps, jobs } => {
            compute(Compute::TempSeries { temps }, common, SweepAxis::Delta, jobs)
        }
        Command::Plot { input, kind, out } => {
            let kind = match kind {
                Kind::Line => PlotKind::Line,
                Kind::Heatmap => PlotKind::Heatmap,
            };
            run_plot(&input, kind, out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdm-rf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
