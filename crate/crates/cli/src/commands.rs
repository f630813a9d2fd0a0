use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use qdm_rf::{
    count_peaks, dressed_energy_curves, dressed_states, emission_spectrum, intensity_map,
    temperature_series, transition_branches, transitions, Axis, Workers,
};

use crate::config::{parse_config, RunConfig};
use crate::error::CliError;
use crate::plot::{render, PlotKind};
use crate::tables;

/// Subcommands that compute from a config.
#[derive(Clone, Debug, PartialEq)]
pub enum Compute {
    Spectrum,
    Transitions,
    Peaks,
    Curves,
    Branches,
    Map,
    TempSeries { temps: Vec<f64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub temp: Option<f64>,
    pub delta: Option<f64>,
    pub axis: Axis,
    pub workers: Workers,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            temp: None,
            delta: None,
            axis: Axis::Delta,
            workers: Workers::default(),
        }
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_config(&text)?)
}

/// Opens `--out`, or stdout when no path is given.
pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|source| CliError::File {
                path: p.to_path_buf(),
                source,
            })?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

/// Runs a compute subcommand and writes its CSV to `out`.
pub fn run_compute<W: Write>(
    cmd: &Compute,
    config: RunConfig,
    opts: &RunOptions,
    mut out: W,
) -> Result<(), CliError> {
    let cfg = config.with_overrides(opts.temp, opts.delta)?;
    let gamma = cfg.model.linewidth(cfg.temp_k).map_err(qdm_rf::SweepError::from)?;

    match cmd {
        Compute::Spectrum => {
            let s = emission_spectrum(&cfg.emitter, &cfg.drive, &cfg.model, cfg.temp_k, &cfg.grid)?;
            tables::write_spectrum(&mut out, &s)?;
        }
        Compute::Transitions => {
            let ts = transitions(&dressed_states(&cfg.emitter, &cfg.drive), cfg.emitter.mu);
            tables::write_transitions(&mut out, &ts, gamma, cfg.model.gamma_rad)?;
        }
        Compute::Peaks => {
            let ts = transitions(&dressed_states(&cfg.emitter, &cfg.drive), cfg.emitter.mu);
            let pc = count_peaks(&ts, cfg.energy_tol, cfg.intensity_floor);
            tables::write_peaks(&mut out, &pc)?;
        }
        Compute::Curves => {
            let rows = dressed_energy_curves(
                &cfg.sweep_on(opts.axis),
                &cfg.sweep_template(opts.axis),
                &cfg.drive,
                opts.workers,
            )?;
            tables::write_curves(&mut out, &rows)?;
        }
        Compute::Branches => {
            let rows = transition_branches(
                &cfg.sweep_on(opts.axis),
                &cfg.sweep_template(opts.axis),
                &cfg.drive,
                opts.workers,
            )?;
            tables::write_branches(&mut out, &rows)?;
        }
        Compute::Map => {
            let map = intensity_map(
                &cfg.sweep_on(opts.axis),
                &cfg.grid,
                &cfg.sweep_template(opts.axis),
                &cfg.drive,
                &cfg.model,
                cfg.temp_k,
                opts.workers,
            )?;
            tables::write_map(&mut out, &map)?;
        }
        Compute::TempSeries { temps } => {
            let series = temperature_series(
                temps,
                &cfg.emitter,
                &cfg.drive,
                &cfg.model,
                &cfg.grid,
                opts.workers,
            )?;
            tables::write_tempseries(&mut out, &series)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Reads a CSV table and writes its SVG rendering.
pub fn run_plot(input: &Path, kind: PlotKind, output: Option<&PathBuf>) -> Result<(), CliError> {
    let file = File::open(input).map_err(|source| CliError::File {
        path: input.to_path_buf(),
        source,
    })?;
    let table = tables::read_table(io::BufReader::new(file))?;
    let svg = render(&table, kind)?;
    let mut out = open_output(output.map(|p| p.as_path()))?;
    out.write_all(svg.as_bytes())?;
    out.flush()?;
    Ok(())
}
