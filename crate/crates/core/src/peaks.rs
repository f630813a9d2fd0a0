//! Counting spectral lines, either from the transition list or from a sampled spectrum.

use crate::spectrum::{SpectrumGrid, Transition};

/// Peak positions closer than this are one line.
pub const DEFAULT_ENERGY_TOL: f64 = 1e-6;
/// Transitions dimmer than this fraction of the brightest are dropped.
pub const DEFAULT_INTENSITY_FLOOR: f64 = 1e-3;
/// Sampled maxima below this fraction of the global maximum are treated as rounding noise.
pub const DEFAULT_RESOLUTION_FLOOR: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct PeakCount {
    pub count: usize,
    /// Luminosity-weighted cluster centers, ascending.
    pub centers: Vec<f64>,
}

/// Groups transition energies into distinct lines.
///
/// Transitions below `intensity_floor · max(lum)` (and any with zero
/// luminosity) are discarded. The remaining positions are sorted and chained
/// into clusters whenever neighbouring gaps are within `energy_tol`.
///
/// # Panics
///
/// If `energy_tol <= 0` or `intensity_floor` is outside `[0, 1)`.
pub fn count_peaks(transitions: &[Transition], energy_tol: f64, intensity_floor: f64) -> PeakCount {
    assert!(energy_tol > 0.0, "energy_tol must be positive");
    assert!(
        (0.0..1.0).contains(&intensity_floor),
        "intensity_floor must be in [0, 1)"
    );

    let max_lum = transitions.iter().map(|t| t.lum).fold(0.0, f64::max);
    let cut = intensity_floor * max_lum;
    let mut kept: Vec<(f64, f64)> = transitions
        .iter()
        .filter(|t| t.lum > 0.0 && t.lum >= cut)
        .map(|t| (t.a, t.lum))
        .collect();
    kept.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut centers = Vec::new();
    let mut iter = kept.into_iter().peekable();
    while let Some((a0, l0)) = iter.next() {
        let (mut last, mut wsum, mut lsum) = (a0, a0 * l0, l0);
        while let Some(&(a, l)) = iter.peek() {
            if a - last > energy_tol {
                break;
            }
            last = a;
            wsum += a * l;
            lsum += l;
            iter.next();
        }
        centers.push(wsum / lsum);
    }

    PeakCount {
        count: centers.len(),
        centers,
    }
}

/// A local maximum of a sampled spectrum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledPeak {
    pub index: usize,
    pub position: f64,
    pub height: f64,
    /// Full width at half maximum, `None` when a neighbouring line keeps the
    /// spectrum above half height on either side.
    pub fwhm: Option<f64>,
}

/// Interior local maxima of the sampled spectrum at or above `rel_floor`
/// times the global maximum.
pub fn local_maxima(spectrum: &SpectrumGrid, rel_floor: f64) -> Vec<SampledPeak> {
    let s = &spectrum.samples;
    let floor = rel_floor * spectrum.max_intensity();
    let mut out = Vec::new();
    let mut k = 1;
    while k + 1 < s.len() {
        let y = s[k].1;
        if y > s[k - 1].1 && y >= floor {
            // walk across a flat top
            let mut end = k;
            while end + 1 < s.len() && s[end + 1].1 == y {
                end += 1;
            }
            if end + 1 < s.len() && s[end + 1].1 < y {
                let mid = (k + end) / 2;
                out.push(SampledPeak {
                    index: mid,
                    position: s[mid].0,
                    height: y,
                    fwhm: fwhm_at(s, mid),
                });
            }
            k = end + 1;
        } else {
            k += 1;
        }
    }
    out
}

/// Resolvable maxima: local maxima above [`DEFAULT_RESOLUTION_FLOOR`].
pub fn resolvable_maxima(spectrum: &SpectrumGrid) -> Vec<SampledPeak> {
    local_maxima(spectrum, DEFAULT_RESOLUTION_FLOOR)
}

/// FWHM of the peak at sample `index` by linear interpolation of the
/// half-height crossings. Gives up if the curve turns upward before crossing.
pub fn fwhm_at(samples: &[(f64, f64)], index: usize) -> Option<f64> {
    let half = samples[index].1 / 2.0;

    let mut left = None;
    let mut k = index;
    while k > 0 {
        let (x0, y0) = samples[k - 1];
        let (x1, y1) = samples[k];
        if y0 > y1 {
            break;
        }
        if y0 <= half {
            left = Some(x0 + (half - y0) * (x1 - x0) / (y1 - y0));
            break;
        }
        k -= 1;
    }

    let mut right = None;
    let mut k = index;
    while k + 1 < samples.len() {
        let (x0, y0) = samples[k];
        let (x1, y1) = samples[k + 1];
        if y1 > y0 {
            break;
        }
        if y1 <= half {
            right = Some(x0 + (y0 - half) * (x1 - x0) / (y0 - y1));
            break;
        }
        k += 1;
    }

    Some(right? - left?)
}
