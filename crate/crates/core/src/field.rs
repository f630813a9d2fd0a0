//! Stark tuning of the exciton splitting by a bias field along the growth axis.

/// eV of shift per (nm · kV/cm) for a unit charge.
pub const SHIFT_EV_PER_NM_KV_CM: f64 = 1e-4;

/// Splitting under a bias field `f` (kV/cm) for interdot distance `d` (nm).
///
/// Positive fields lower the indirect exciton, so the splitting decreases by
/// `e·d·F`.
pub fn delta_from_field(delta_zero_field: f64, d: f64, f: f64) -> f64 {
    debug_assert!(d > 0.0, "interdot distance must be positive");
    delta_zero_field - d * f * SHIFT_EV_PER_NM_KV_CM
}

/// Field (kV/cm) that brings the two excitons into resonance.
pub fn resonance_field(delta_zero_field: f64, d: f64) -> f64 {
    delta_zero_field / (d * SHIFT_EV_PER_NM_KV_CM)
}
