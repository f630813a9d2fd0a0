use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },
    #[error("{name} must be {constraint}, got {value}")]
    Constraint {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("temperature must be non-negative, got {0} K")]
    NegativeTemperature(f64),
    #[error("population linewidth must be positive, got {0} eV")]
    NonPositiveGamma(f64),
    #[error("radiative linewidth must be positive, got {0} eV")]
    NonPositiveGammaRad(f64),
    #[error("transition list is empty")]
    NoTransitions,
    #[error("grid needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("grid range is empty: [{min}, {max}]")]
    EmptyRange { min: f64, max: f64 },
    #[error(transparent)]
    Param(#[from] ParamError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("sweep range must satisfy lo < hi, got [{lo}, {hi}]")]
    EmptyRange { lo: f64, hi: f64 },
    #[error("sweep needs at least 2 steps, got {0}")]
    TooFewSteps(usize),
    #[error("expected a {expected} sweep, got {got}")]
    WrongAxis {
        expected: &'static str,
        got: &'static str,
    },
    #[error("temperature list is empty")]
    NoTemperatures,
    #[error("failed to start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Param(#[from] ParamError),
}
