//! Temperature-dependent population linewidth.

use crate::error::SpectrumError;
use crate::params::{non_negative, positive};
use crate::ParamError;

/// Boltzmann constant, eV/K.
pub const K_B: f64 = 8.617333262e-5;

/// `Γ(T) = Γ₀ + a·T + b·exp(-ΔE / k_B·T)` together with the radiative width `γ`.
///
/// The acoustic-phonon term dominates at low temperature; the optical-phonon
/// term is off unless `b_coef > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BroadeningModel {
    pub gamma0: f64,
    pub a_coef: f64,
    pub b_coef: f64,
    pub delta_e: f64,
    pub gamma_rad: f64,
}

impl Default for BroadeningModel {
    /// Γ₀ = 75 µeV, a = 22 µeV/K, no optical-phonon term, γ = Γ₀.
    fn default() -> Self {
        Self {
            gamma0: 75e-6,
            a_coef: 22e-6,
            b_coef: 0.0,
            delta_e: 0.036,
            gamma_rad: 75e-6,
        }
    }
}

impl BroadeningModel {
    pub fn validate(&self) -> Result<(), ParamError> {
        positive("gamma0", self.gamma0)?;
        non_negative("a_coef", self.a_coef)?;
        non_negative("b_coef", self.b_coef)?;
        positive("gamma_rad", self.gamma_rad)?;
        if self.b_coef > 0.0 {
            positive("delta_e", self.delta_e)?;
        }
        Ok(())
    }

    /// Population linewidth at `temp` kelvin.
    pub fn linewidth(&self, temp: f64) -> Result<f64, SpectrumError> {
        linewidth(self, temp)
    }
}

pub fn linewidth(model: &BroadeningModel, temp: f64) -> Result<f64, SpectrumError> {
    if !(temp >= 0.0) {
        return Err(SpectrumError::NegativeTemperature(temp));
    }
    let optical = if model.b_coef == 0.0 || temp == 0.0 {
        0.0
    } else {
        model.b_coef * (-model.delta_e / (K_B * temp)).exp()
    };
    Ok(model.gamma0 + model.a_coef * temp + optical)
}
