//! Dressed states: exact diagonalization of the rung Hamiltonian.
//!
//! Uses cyclic Jacobi rotations. For a 3×3 symmetric matrix this converges
//! quadratically in a handful of sweeps and keeps the accumulated eigenvector
//! matrix orthogonal to machine precision, including at exact degeneracies
//! where closed-form eigenvector formulas lose accuracy.

use crate::hamiltonian::{TripletHamiltonian, DIRECT, GROUND, INDIRECT};

const MAX_SWEEPS: usize = 64;

/// Relative magnitude below which two components count as tied for the sign rule.
const SIGN_TIE_TOL: f64 = 1e-12;

/// Eigen-decomposition of one rung.
///
/// `coeffs[i]` holds `(C_g, C_XD, C_XI)` of dressed state `i`, with
/// `energies` ascending and measured from `e_ref`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DressedTriplet {
    pub energies: [f64; 3],
    pub coeffs: [[f64; 3]; 3],
    pub e_ref: f64,
}

impl DressedTriplet {
    pub fn c_g(&self, i: usize) -> f64 {
        self.coeffs[i][GROUND]
    }

    pub fn c_xd(&self, i: usize) -> f64 {
        self.coeffs[i][DIRECT]
    }

    pub fn c_xi(&self, i: usize) -> f64 {
        self.coeffs[i][INDIRECT]
    }

    /// Absolute energy of dressed state `i`.
    pub fn absolute_energy(&self, i: usize) -> f64 {
        self.e_ref + self.energies[i]
    }

    /// `max |C·Cᵀ - I|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let c = &self.coeffs;
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let dot: f64 = (0..3).map(|k| c[a][k] * c[b][k]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max_i ‖m·vᵢ - λᵢ·vᵢ‖∞` against the Hamiltonian this came from.
    pub fn eigen_residual(&self, h: &TripletHamiltonian) -> f64 {
        let mut worst = 0.0f64;
        for (lambda, v) in self.energies.iter().zip(&self.coeffs) {
            for (row, vk) in h.m.iter().zip(v) {
                let mv: f64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                worst = worst.max((mv - lambda * vk).abs());
            }
        }
        worst
    }
}

/// Diagonalizes the rung Hamiltonian into ascending dressed states.
///
/// Degenerate eigenvalues are allowed; the returned basis of a degenerate
/// subspace is orthonormal but otherwise arbitrary. Each coefficient row is
/// signed so that its largest-magnitude component is positive (first one on a tie).
pub fn diagonalize(h: &TripletHamiltonian) -> DressedTriplet {
    let (values, vectors) = jacobi_eigen(h.m);

    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));

    let mut energies = [0.0; 3];
    let mut coeffs = [[0.0; 3]; 3];
    for (slot, &k) in order.iter().enumerate() {
        energies[slot] = values[k];
        // column k of the rotation matrix is eigenvector k
        let mut row = [vectors[0][k], vectors[1][k], vectors[2][k]];
        apply_sign_rule(&mut row);
        coeffs[slot] = row;
    }

    DressedTriplet {
        energies,
        coeffs,
        e_ref: h.e_ref,
    }
}

fn apply_sign_rule(v: &mut [f64; 3]) {
    let max_abs = v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let lead = v
        .iter()
        .position(|x| x.abs() >= max_abs * (1.0 - SIGN_TIE_TOL))
        .unwrap_or(0);
    if v[lead] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Cyclic Jacobi. Returns eigenvalues and the orthogonal matrix whose
/// columns are the matching eigenvectors.
fn jacobi_eigen(mut a: [[f64; 3]; 3]) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

    for sweep in 0..MAX_SWEEPS {
        let off = a[0][1].abs() + a[0][2].abs() + a[1][2].abs();
        if off == 0.0 {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if apq == 0.0 {
                continue;
            }
            let g = 100.0 * apq.abs();
            // once the element is below the rounding level of both diagonal
            // entries a rotation cannot change anything
            if sweep > 3 && a[p][p].abs() + g == a[p][p].abs() && a[q][q].abs() + g == a[q][q].abs()
            {
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            let t = if theta.abs() > 1e150 {
                0.5 / theta
            } else {
                theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            a[p][p] -= t * apq;
            a[q][q] += t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            let r = 3 - p - q;
            let arp = a[r][p];
            let arq = a[r][q];
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];

            for row in v.iter_mut() {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }

    ([a[0][0], a[1][1], a[2][2]], v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(m: [[f64; 3]; 3]) -> TripletHamiltonian {
        TripletHamiltonian { m, e_ref: 0.0 }
    }

    #[test]
    fn resonant_triplet_closed_form() {
        let h = sym([[0.0, 0.1, 0.0], [0.1, 0.0, 0.1], [0.0, 0.1, 0.0]]);
        let d = diagonalize(&h);
        let r = 0.02f64.sqrt();
        assert!((d.energies[0] + r).abs() < 1e-14);
        assert!(d.energies[1].abs() < 1e-14);
        assert!((d.energies[2] - r).abs() < 1e-14);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in d.coeffs[1].iter().zip([s, 0.0, -s]) {
            assert!((got - want).abs() < 1e-14, "{:?}", d.coeffs[1]);
        }
    }

    #[test]
    fn diagonal_input_is_left_alone() {
        let h = sym([[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.4]]);
        let d = diagonalize(&h);
        assert_eq!(d.energies, [0.0, 0.0, 0.4]);
        assert_eq!(d.coeffs, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    }

    #[test]
    fn unsorted_diagonal_is_permuted() {
        let h = sym([[0.3, 0.0, 0.0], [0.0, -0.2, 0.0], [0.0, 0.0, 0.1]]);
        let d = diagonalize(&h);
        assert_eq!(d.energies, [-0.2, 0.1, 0.3]);
        assert_eq!(d.coeffs, [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]);
    }

    #[test]
    fn sign_rule_holds() {
        let h = sym([[0.05, -0.2, 0.0], [-0.2, 0.0, 0.07], [0.0, 0.07, -0.3]]);
        let d = diagonalize(&h);
        for row in &d.coeffs {
            let lead = row
                .iter()
                .cloned()
                .fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
            assert!(lead > 0.0, "{row:?}");
        }
        assert!(d.orthonormality_residual() < 1e-14);
        assert!(d.eigen_residual(&h) < 1e-14);
    }

    #[test]
    fn fully_degenerate_matrix() {
        let h = sym([[0.2, 0.0, 0.0], [0.0, 0.2, 0.0], [0.0, 0.0, 0.2]]);
        let d = diagonalize(&h);
        assert_eq!(d.energies, [0.2; 3]);
        assert!(d.orthonormality_residual() == 0.0);
    }

    #[test]
    fn large_splitting_recovers_two_level_pair() {
        let h = sym([[0.0, 0.1, 0.0], [0.1, 0.0, 0.1], [0.0, 0.1, 5.0]]);
        let d = diagonalize(&h);
        assert!((d.energies[0] + 0.1).abs() < 5e-3);
        assert!((d.energies[1] - 0.1).abs() < 5e-3);
        assert!(d.c_xi(2) > 0.99);
    }
}
