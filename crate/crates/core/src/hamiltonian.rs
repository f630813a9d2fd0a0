//! Rotating-frame Hamiltonian of one rung of the dressed ladder.
//!
//! Each rung couples the three bare states `|n,g⟩`, `|n-1,XD⟩` and
//! `|n-1,XI⟩`. Every rung shares the same energy differences, so the common
//! offset `E_XD + (n-1)·ħω_L` is pulled out into [`TripletHamiltonian::e_ref`]
//! and only the small 3×3 remainder is diagonalized.

use crate::params::{DriveParams, EmitterParams};

/// Index of `|n,g⟩` in the bare basis.
pub const GROUND: usize = 0;
/// Index of `|n-1,XD⟩` in the bare basis.
pub const DIRECT: usize = 1;
/// Index of `|n-1,XI⟩` in the bare basis.
pub const INDIRECT: usize = 2;

/// Symmetric 3×3 matrix in the bare basis, measured from `e_ref`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripletHamiltonian {
    pub m: [[f64; 3]; 3],
    pub e_ref: f64,
}

impl TripletHamiltonian {
    /// Builds a Hamiltonian from the upper triangle; the lower triangle is mirrored.
    pub fn from_upper(diag: [f64; 3], m01: f64, m02: f64, m12: f64, e_ref: f64) -> Self {
        let m = [
            [diag[0], m01, m02],
            [m01, diag[1], m12],
            [m02, m12, diag[2]],
        ];
        Self { m, e_ref }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.m
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Laser detuning `ħω_L + E_0 - E_XD`: energy of `|n,g⟩` above `|n-1,XD⟩`.
pub fn laser_detuning(emitter: &EmitterParams, drive: &DriveParams) -> f64 {
    drive.hw_l + emitter.e0 - emitter.e_xd
}

/// Reference energy `E_XD + (n-1)·ħω_L` removed from the rung diagonal.
pub fn reference_energy(emitter: &EmitterParams, drive: &DriveParams) -> f64 {
    emitter.e_xd + (drive.n as f64 - 1.0) * drive.hw_l
}

/// Rung Hamiltonian `[[δ_L, g√n, 0], [g√n, 0, t], [0, t, Δ]]`.
///
/// The indirect exciton has no optical coupling to the exciton-free state, so
/// the `(g, XI)` element is identically zero. Tunneling conserves photon
/// number and is entered symmetrically.
pub fn reduced_hamiltonian(emitter: &EmitterParams, drive: &DriveParams) -> TripletHamiltonian {
    TripletHamiltonian::from_upper(
        [laser_detuning(emitter, drive), 0.0, emitter.delta],
        drive.rabi(),
        0.0,
        emitter.t,
        reference_energy(emitter, drive),
    )
}
