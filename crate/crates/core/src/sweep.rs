//! Parameter sweeps over the exciton splitting, bias field and temperature.
//!
//! Rows are evaluated independently, optionally on a worker pool. Results are
//! assembled in input order, and every row is a pure function of its inputs,
//! so output does not depend on the number of workers.

use rayon::prelude::*;

use crate::broadening::BroadeningModel;
use crate::dressed::{diagonalize, DressedTriplet};
use crate::error::SweepError;
use crate::field::delta_from_field;
use crate::hamiltonian::reduced_hamiltonian;
use crate::params::{DriveParams, EmitterParams};
use crate::spectrum::{synthesize, transitions, GridSpec, SpectrumGrid, Transition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// Exciton splitting, eV.
    Delta,
    /// Temperature, K.
    Temperature,
    /// Bias field, kV/cm.
    Field,
}

impl Axis {
    pub fn as_str(self) -> &'static str {
        match self {
            Axis::Delta => "delta",
            Axis::Temperature => "temperature",
            Axis::Field => "field",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRange {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
    pub axis: Axis,
}

impl SweepRange {
    pub fn new(lo: f64, hi: f64, steps: usize, axis: Axis) -> Result<Self, SweepError> {
        let r = Self { lo, hi, steps, axis };
        r.validate()?;
        Ok(r)
    }

    /// Splitting window used for the intensity map: 0 to 60 meV in 241 steps.
    pub fn default_delta() -> Self {
        Self {
            lo: 0.0,
            hi: 0.06,
            steps: 241,
            axis: Axis::Delta,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(SweepError::EmptyRange {
                lo: self.lo,
                hi: self.hi,
            });
        }
        if self.steps < 2 {
            return Err(SweepError::TooFewSteps(self.steps));
        }
        Ok(())
    }

    /// Sweep coordinates, with both end points hit exactly.
    pub fn values(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| {
                if k + 1 == self.steps {
                    self.hi
                } else {
                    self.lo + k as f64 * step
                }
            })
            .collect()
    }

    /// Exciton splittings visited by a delta or field sweep. For a field
    /// sweep the template's `delta` is the zero-field splitting.
    pub fn splittings(&self, template: &EmitterParams) -> Result<Vec<(f64, f64)>, SweepError> {
        self.validate()?;
        let xs = self.values();
        match self.axis {
            Axis::Delta => Ok(xs.into_iter().map(|x| (x, x)).collect()),
            Axis::Field => Ok(xs
                .into_iter()
                .map(|f| (f, delta_from_field(template.delta, template.d, f)))
                .collect()),
            Axis::Temperature => Err(SweepError::WrongAxis {
                expected: "delta or field",
                got: self.axis.as_str(),
            }),
        }
    }
}

/// Number of worker threads for sweep evaluation. One means run inline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workers(pub usize);

impl Workers {
    pub const SERIAL: Workers = Workers(1);
}

impl Default for Workers {
    fn default() -> Self {
        Workers(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

fn ordered_map<T, R, F>(items: &[T], workers: Workers, f: F) -> Result<Vec<R>, SweepError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, SweepError> + Sync + Send,
{
    if workers.0 <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.0)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    pool.install(|| items.par_iter().map(f).collect())
}

/// Dressed triplet of `emitter` under `drive`.
pub fn dressed_states(emitter: &EmitterParams, drive: &DriveParams) -> DressedTriplet {
    diagonalize(&reduced_hamiltonian(emitter, drive))
}

/// Full pipeline for one parameter point: diagonalize, enumerate
/// transitions, broaden at `temp` and sample on `grid`.
pub fn emission_spectrum(
    emitter: &EmitterParams,
    drive: &DriveParams,
    model: &BroadeningModel,
    temp: f64,
    grid: &GridSpec,
) -> Result<SpectrumGrid, SweepError> {
    emitter.validate()?;
    drive.validate()?;
    model.validate()?;
    let ts = transitions(&dressed_states(emitter, drive), emitter.mu);
    let gamma = model.linewidth(temp)?;
    let mut s = synthesize(&ts, gamma, model.gamma_rad, grid)?;
    s.meta.temp_k = Some(temp);
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveRow {
    /// Sweep coordinate (equal to `delta` for a delta sweep).
    pub x: f64,
    pub delta: f64,
    pub energies: [f64; 3],
}

/// Dressed energies as a function of the splitting.
pub fn dressed_energy_curves(
    range: &SweepRange,
    emitter: &EmitterParams,
    drive: &DriveParams,
    workers: Workers,
) -> Result<Vec<CurveRow>, SweepError> {
    emitter.validate()?;
    drive.validate()?;
    let points = range.splittings(emitter)?;
    ordered_map(&points, workers, |&(x, delta)| {
        let d = dressed_states(&emitter.with_delta(delta), drive);
        Ok(CurveRow {
            x,
            delta,
            energies: d.energies,
        })
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchRow {
    pub x: f64,
    pub delta: f64,
    /// All nine transitions in `(i, j)` row-major order.
    pub transitions: Vec<Transition>,
}

/// Transition energies `a_ij` along the splitting sweep.
///
/// Branches keep their `(i, j)` label from the ascending sort of the dressed
/// energies; at an exact level crossing two labels can swap.
pub fn transition_branches(
    range: &SweepRange,
    emitter: &EmitterParams,
    drive: &DriveParams,
    workers: Workers,
) -> Result<Vec<BranchRow>, SweepError> {
    emitter.validate()?;
    drive.validate()?;
    let points = range.splittings(emitter)?;
    ordered_map(&points, workers, |&(x, delta)| {
        let d = dressed_states(&emitter.with_delta(delta), drive);
        Ok(BranchRow {
            x,
            delta,
            transitions: transitions(&d, emitter.mu),
        })
    })
}

/// One spectrum per temperature, all on the same grid.
pub fn temperature_series(
    temps: &[f64],
    emitter: &EmitterParams,
    drive: &DriveParams,
    model: &BroadeningModel,
    grid: &GridSpec,
    workers: Workers,
) -> Result<Vec<SpectrumGrid>, SweepError> {
    if temps.is_empty() {
        return Err(SweepError::NoTemperatures);
    }
    ordered_map(temps, workers, |&t| {
        emission_spectrum(emitter, drive, model, t, grid)
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapMeta {
    pub temp_k: f64,
    pub gamma: f64,
    pub gamma_rad: f64,
    pub emitter: EmitterParams,
    pub drive: DriveParams,
}

/// `S(Δ′)` over a range of splittings.
#[derive(Clone, Debug, PartialEq)]
pub struct IntensityMap {
    pub delta_axis: Vec<f64>,
    pub dp_axis: Vec<f64>,
    /// `values[r][k]` is the intensity at `delta_axis[r]`, `dp_axis[k]`.
    pub values: Vec<Vec<f64>>,
    pub meta: MapMeta,
}

impl IntensityMap {
    /// Row `r` as a standalone spectrum.
    pub fn row_spectrum(&self, r: usize, grid: &GridSpec) -> SpectrumGrid {
        SpectrumGrid {
            grid: *grid,
            samples: self
                .dp_axis
                .iter()
                .copied()
                .zip(self.values[r].iter().copied())
                .collect(),
            meta: crate::spectrum::SpectrumMeta {
                temp_k: Some(self.meta.temp_k),
                gamma: self.meta.gamma,
                gamma_rad: self.meta.gamma_rad,
            },
        }
    }
}

pub fn intensity_map(
    delta_range: &SweepRange,
    grid: &GridSpec,
    emitter: &EmitterParams,
    drive: &DriveParams,
    model: &BroadeningModel,
    temp: f64,
    workers: Workers,
) -> Result<IntensityMap, SweepError> {
    emitter.validate()?;
    let points = delta_range.splittings(emitter)?;
    let gamma = model.linewidth(temp)?;
    let rows = ordered_map(&points, workers, |&(_, delta)| {
        emission_spectrum(&emitter.with_delta(delta), drive, model, temp, grid)
    })?;

    Ok(IntensityMap {
        delta_axis: points.iter().map(|p| p.1).collect(),
        dp_axis: grid.points().collect(),
        values: rows
            .into_iter()
            .map(|s| s.samples.into_iter().map(|(_, y)| y).collect())
            .collect(),
        meta: MapMeta {
            temp_k: temp,
            gamma,
            gamma_rad: model.gamma_rad,
            emitter: *emitter,
            drive: *drive,
        },
    })
}
