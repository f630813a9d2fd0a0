//! Physical parameters of the driven double-dot emitter.

use crate::error::ParamError;

/// Static properties of the quantum-dot molecule. Energies in eV.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmitterParams {
    /// Direct exciton energy E_XD.
    pub e_xd: f64,
    /// Exciton splitting E_XI - E_XD (signed).
    pub delta: f64,
    /// Tunneling coupling between the direct and indirect exciton.
    pub t: f64,
    /// Dipole scale; luminosities come out in units of `mu^2`.
    pub mu: f64,
    /// Interdot distance in nm. Only used for field tuning.
    pub d: f64,
    /// Energy of the exciton-free configuration.
    pub e0: f64,
}

impl EmitterParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        finite("e_xd", self.e_xd)?;
        finite("delta", self.delta)?;
        finite("e0", self.e0)?;
        non_negative("t", self.t)?;
        positive("mu", self.mu)?;
        positive("d", self.d)?;
        Ok(())
    }

    pub fn with_delta(self, delta: f64) -> Self {
        Self { delta, ..self }
    }
}

impl Default for EmitterParams {
    /// The symmetric molecule used throughout the seven-peak example:
    /// E_XD = 1 eV, t = 0.1 eV, Δ = 8 meV.
    fn default() -> Self {
        Self {
            e_xd: 1.0,
            delta: 0.008,
            t: 0.1,
            mu: 1.0,
            d: 10.0,
            e0: 0.0,
        }
    }
}

/// Monochromatic driving field in the Fock-state picture.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DriveParams {
    /// Photon number of the upper rung.
    pub n: u64,
    /// Single-photon radiation-matter coupling, eV.
    pub g: f64,
    /// Laser photon energy, eV.
    pub hw_l: f64,
}

impl DriveParams {
    /// Builds a drive from the effective coupling `g·√n` rather than `g`.
    pub fn from_rabi(g_sqrt_n: f64, n: u64, hw_l: f64) -> Self {
        let g = if n == 0 { g_sqrt_n } else { g_sqrt_n / (n as f64).sqrt() };
        Self { n, g, hw_l }
    }

    /// Effective coupling `g·√n` entering the triplet Hamiltonian.
    pub fn rabi(&self) -> f64 {
        self.g * (self.n as f64).sqrt()
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.n < 1 {
            return Err(ParamError::Constraint {
                name: "n",
                constraint: ">= 1",
                value: self.n as f64,
            });
        }
        non_negative("g", self.g)?;
        positive("hw_l", self.hw_l)?;
        Ok(())
    }
}

impl Default for DriveParams {
    /// n = 100 photons with g·√n = 0.1 eV at ħω_L = 1 eV.
    fn default() -> Self {
        Self::from_rabi(0.1, 100, 1.0)
    }
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<(), ParamError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ParamError::NotFinite { name, value })
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<(), ParamError> {
    finite(name, value)?;
    if value >= 0.0 {
        Ok(())
    } else {
        Err(ParamError::Constraint {
            name,
            constraint: ">= 0",
            value,
        })
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<(), ParamError> {
    finite(name, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(ParamError::Constraint {
            name,
            constraint: "> 0",
            value,
        })
    }
}
