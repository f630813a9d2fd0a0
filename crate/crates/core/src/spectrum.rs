//! Dressed-state transitions and Lorentzian synthesis of the emission spectrum.
//!
//! A photon is emitted when the molecule drops from dressed state `i` of one
//! rung to dressed state `j` of the rung below. With the intense-field
//! identification both rungs share one set of coefficients, so the emitted
//! photon sits at `a_ij = E_i - E_j` from the laser line and its luminosity is
//! `μ²·(C_g^j)²·(C_XD^i)²`: the dipole operator takes the XD component of the
//! upper state to the exciton-free component of the lower state.
//!
//! Summing over `i, j` gives exactly `μ²` because the columns of the
//! coefficient matrix are unit vectors.

use crate::dressed::DressedTriplet;
use crate::error::SpectrumError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeakKind {
    /// `i == j`, emission at the laser frequency.
    Central,
    /// `i != j`, sideband.
    Side,
}

impl PeakKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PeakKind::Central => "central",
            PeakKind::Side => "side",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transition {
    /// Upper dressed state, 1-based.
    pub i: usize,
    /// Lower dressed state, 1-based.
    pub j: usize,
    /// Detuning from the laser, eV.
    pub a: f64,
    /// Luminosity in units of `μ²` (already scaled).
    pub lum: f64,
    pub kind: PeakKind,
}

impl Transition {
    pub fn hwhm(&self, gamma: f64, gamma_rad: f64) -> f64 {
        hwhm(self.kind, gamma, gamma_rad)
    }
}

/// All nine transitions, ordered `(1,1), (1,2), ..., (3,3)`.
pub fn transitions(dressed: &DressedTriplet, mu: f64) -> Vec<Transition> {
    let mu2 = mu * mu;
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let (a, kind) = if i == j {
                (0.0, PeakKind::Central)
            } else {
                (dressed.energies[i] - dressed.energies[j], PeakKind::Side)
            };
            let cg = dressed.c_g(j);
            let cxd = dressed.c_xd(i);
            out.push(Transition {
                i: i + 1,
                j: j + 1,
                a,
                lum: mu2 * cg * cg * cxd * cxd,
                kind,
            });
        }
    }
    out
}

/// Half width at half maximum: `Γ/2` for central peaks, `(Γ + γ)/2` for sidebands.
pub fn hwhm(kind: PeakKind, gamma: f64, gamma_rad: f64) -> f64 {
    match kind {
        PeakKind::Central => gamma / 2.0,
        PeakKind::Side => (gamma + gamma_rad) / 2.0,
    }
}

/// Uniform detuning grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub dp_min: f64,
    pub dp_max: f64,
    pub npoints: usize,
}

impl GridSpec {
    pub fn new(dp_min: f64, dp_max: f64, npoints: usize) -> Self {
        Self {
            dp_min,
            dp_max,
            npoints,
        }
    }

    pub fn validate(&self) -> Result<(), SpectrumError> {
        if self.npoints < 2 {
            return Err(SpectrumError::TooFewPoints(self.npoints));
        }
        if !(self.dp_min < self.dp_max) || !self.dp_min.is_finite() || !self.dp_max.is_finite() {
            return Err(SpectrumError::EmptyRange {
                min: self.dp_min,
                max: self.dp_max,
            });
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        (self.dp_max - self.dp_min) / (self.npoints - 1) as f64
    }

    /// Detuning of sample `k`. The last sample lands on `dp_max` exactly.
    pub fn point(&self, k: usize) -> f64 {
        if k + 1 == self.npoints {
            self.dp_max
        } else {
            self.dp_min + k as f64 * self.step()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.npoints).map(move |k| self.point(k))
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::new(-0.35, 0.35, 7001)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumMeta {
    /// Temperature the linewidth was taken at, when known.
    pub temp_k: Option<f64>,
    pub gamma: f64,
    pub gamma_rad: f64,
}

/// Sampled `S(Δ′)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumGrid {
    pub grid: GridSpec,
    /// `(Δ′, intensity)` pairs, ascending in `Δ′`.
    pub samples: Vec<(f64, f64)>,
    pub meta: SpectrumMeta,
}

impl SpectrumGrid {
    pub fn intensities(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.1)
    }

    pub fn max_intensity(&self) -> f64 {
        self.intensities().fold(0.0, f64::max)
    }
}

/// Lorentzian with peak value `height` and half width `f`, centered at `a`.
#[inline]
pub fn lorentzian(x: f64, a: f64, height: f64, f: f64) -> f64 {
    let dx = x - a;
    height * f * f / (dx * dx + f * f)
}

/// Evaluates `S(Δ′) = Σ I·f² / ((Δ′ - a)² + f²)` with `I = L / f`.
pub fn spectrum_at(x: f64, lines: &[Line]) -> f64 {
    lines
        .iter()
        .map(|l| lorentzian(x, l.center, l.height, l.hwhm))
        .sum()
}

/// One broadened emission line ready for evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub center: f64,
    pub height: f64,
    pub hwhm: f64,
}

/// Converts transitions into lines, dropping those with zero luminosity.
pub fn lines(transitions: &[Transition], gamma: f64, gamma_rad: f64) -> Vec<Line> {
    transitions
        .iter()
        .filter(|t| t.lum > 0.0)
        .map(|t| {
            let f = t.hwhm(gamma, gamma_rad);
            Line {
                center: t.a,
                height: t.lum / f,
                hwhm: f,
            }
        })
        .collect()
}

/// Samples the spectrum of `transitions` at linewidth `gamma` on `grid`.
pub fn synthesize(
    transitions: &[Transition],
    gamma: f64,
    gamma_rad: f64,
    grid: &GridSpec,
) -> Result<SpectrumGrid, SpectrumError> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(SpectrumError::NonPositiveGamma(gamma));
    }
    if !(gamma_rad > 0.0) || !gamma_rad.is_finite() {
        return Err(SpectrumError::NonPositiveGammaRad(gamma_rad));
    }
    if transitions.is_empty() {
        return Err(SpectrumError::NoTransitions);
    }
    grid.validate()?;

    let lines = lines(transitions, gamma, gamma_rad);
    let samples = grid.points().map(|x| (x, spectrum_at(x, &lines))).collect();
    Ok(SpectrumGrid {
        grid: *grid,
        samples,
        meta: SpectrumMeta {
            temp_k: None,
            gamma,
            gamma_rad,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dressed::diagonalize;
    use crate::hamiltonian::TripletHamiltonian;

    fn resonant() -> DressedTriplet {
        diagonalize(&TripletHamiltonian {
            m: [[0.0, 0.1, 0.0], [0.1, 0.0, 0.1], [0.0, 0.1, 0.0]],
            e_ref: 0.0,
        })
    }

    #[test]
    fn nine_transitions_three_central() {
        let ts = transitions(&resonant(), 1.0);
        assert_eq!(ts.len(), 9);
        let central: Vec<_> = ts.iter().filter(|t| t.kind == PeakKind::Central).collect();
        assert_eq!(central.len(), 3);
        assert!(central.iter().all(|t| t.a == 0.0 && t.i == t.j));
    }

    #[test]
    fn hwhm_rules() {
        assert_eq!(hwhm(PeakKind::Side, 75e-6, 75e-6), 75e-6);
        assert!((hwhm(PeakKind::Central, 515e-6, 75e-6) - 257.5e-6).abs() < 1e-18);
        assert!((hwhm(PeakKind::Side, 185e-6, 75e-6) - 130e-6).abs() < 1e-18);
    }

    #[test]
    fn single_sideband_shape() {
        let t = Transition {
            i: 1,
            j: 2,
            a: 0.2,
            lum: 1.0,
            kind: PeakKind::Side,
        };
        // f = (Γ + γ)/2 = 1e-4
        let lines = lines(&[t], 1e-4, 1e-4);
        assert!((spectrum_at(0.2, &lines) - 1e4).abs() < 1e-8);
        assert!((spectrum_at(0.2 + 1e-4, &lines) - 5e3).abs() < 1e-6);
        assert!((spectrum_at(0.2 - 1e-4, &lines) - 5e3).abs() < 1e-6);
    }

    #[test]
    fn synthesize_rejects_bad_input() {
        let ts = transitions(&resonant(), 1.0);
        let g = GridSpec::new(-0.1, 0.1, 11);
        assert_eq!(
            synthesize(&ts, 0.0, 1e-4, &g),
            Err(SpectrumError::NonPositiveGamma(0.0))
        );
        assert_eq!(
            synthesize(&ts, 1e-4, -1.0, &g),
            Err(SpectrumError::NonPositiveGammaRad(-1.0))
        );
        assert_eq!(
            synthesize(&[], 1e-4, 1e-4, &g),
            Err(SpectrumError::NoTransitions)
        );
        assert!(synthesize(&ts, 1e-4, 1e-4, &GridSpec::new(0.1, 0.1, 11)).is_err());
        assert!(synthesize(&ts, 1e-4, 1e-4, &GridSpec::new(-0.1, 0.1, 1)).is_err());
    }

    #[test]
    fn grid_is_uniform_and_closed() {
        let g = GridSpec::new(-0.35, 0.35, 7001);
        let pts: Vec<f64> = g.points().collect();
        assert_eq!(pts.len(), 7001);
        assert_eq!(pts[0], -0.35);
        assert_eq!(pts[7000], 0.35);
        assert!(pts.windows(2).all(|w| w[1] > w[0]));
        assert!(pts.windows(2).all(|w| ((w[1] - w[0]) - 1e-4).abs() < 1e-12));
    }

    #[test]
    fn central_peaks_are_summed() {
        let ts = transitions(&resonant(), 1.0);
        let s = synthesize(&ts, 75e-6, 75e-6, &GridSpec::new(-1e-3, 1e-3, 3)).unwrap();
        let central_lum: f64 = ts
            .iter()
            .filter(|t| t.kind == PeakKind::Central)
            .map(|t| t.lum)
            .sum();
        let side_tail: f64 = ts
            .iter()
            .filter(|t| t.kind == PeakKind::Side && t.lum > 0.0)
            .map(|t| lorentzian(0.0, t.a, t.lum / 75e-6, 75e-6))
            .sum();
        let want = central_lum / 37.5e-6 + side_tail;
        assert!((s.samples[1].1 - want).abs() < 1e-9 * want);
    }
}
