//! Resonance fluorescence of a laser-driven double quantum dot.
//!
//! The driven molecule is described rung by rung: each rung of the dressed
//! ladder is a 3×3 problem in the bare states `|n,g⟩`, `|n-1,XD⟩`,
//! `|n-1,XI⟩`. Diagonalizing it gives the dressed triplet; photons are
//! emitted in the nine transitions between adjacent triplets, each broadened
//! into a Lorentzian whose width grows linearly with temperature.
//!
//! ```
//! use qdm_rf::{emission_spectrum, BroadeningModel, DriveParams, EmitterParams, GridSpec};
//!
//! let emitter = EmitterParams::default().with_delta(0.0);
//! let drive = DriveParams::from_rabi(0.1, 100, 1.0);
//! let s = emission_spectrum(&emitter, &drive, &BroadeningModel::default(), 0.0, &GridSpec::default())
//!     .unwrap();
//! assert_eq!(s.samples.len(), 7001);
//! ```

pub mod broadening;
pub mod dressed;
mod error;
pub mod field;
pub mod hamiltonian;
pub mod params;
pub mod peaks;
pub mod spectrum;
pub mod sweep;

pub use broadening::{linewidth, BroadeningModel, K_B};
pub use dressed::{diagonalize, DressedTriplet};
pub use error::{ParamError, SpectrumError, SweepError};
pub use field::{delta_from_field, resonance_field};
pub use hamiltonian::{reduced_hamiltonian, TripletHamiltonian};
pub use params::{DriveParams, EmitterParams};
pub use peaks::{count_peaks, local_maxima, resolvable_maxima, PeakCount, SampledPeak};
pub use spectrum::{
    hwhm, synthesize, transitions, GridSpec, PeakKind, SpectrumGrid, SpectrumMeta, Transition,
};
pub use sweep::{
    dressed_energy_curves, dressed_states, emission_spectrum, intensity_map, temperature_series,
    transition_branches, Axis, IntensityMap, SweepRange, Workers,
};
