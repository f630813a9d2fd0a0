//! Reference computations that do not go through the Jacobi solver.

#![allow(dead_code)]

/// Characteristic polynomial coefficients of a symmetric 3×3:
/// `λ³ - c2 λ² + c1 λ - c0`.
pub fn char_poly(m: &[[f64; 3]; 3]) -> (f64, f64, f64) {
    let c2 = m[0][0] + m[1][1] + m[2][2];
    let c1 = m[0][0] * m[1][1] + m[0][0] * m[2][2] + m[1][1] * m[2][2]
        - m[0][1] * m[1][0]
        - m[0][2] * m[2][0]
        - m[1][2] * m[2][1];
    let c0 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    (c2, c1, c0)
}

pub fn char_poly_eval(m: &[[f64; 3]; 3], x: f64) -> f64 {
    let (c2, c1, c0) = char_poly(m);
    ((x - c2) * x + c1) * x - c0
}

/// Trigonometric (Viète) roots of the characteristic polynomial, ascending.
pub fn trig_eigenvalues(m: &[[f64; 3]; 3]) -> [f64; 3] {
    let p1 = m[0][1].powi(2) + m[0][2].powi(2) + m[1][2].powi(2);
    let q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    if p1 == 0.0 {
        let mut d = [m[0][0], m[1][1], m[2][2]];
        d.sort_by(f64::total_cmp);
        return d;
    }
    let p2 = (m[0][0] - q).powi(2) + (m[1][1] - q).powi(2) + (m[2][2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let mut b = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            b[r][c] = (m[r][c] - if r == c { q } else { 0.0 }) / p;
        }
    }
    let (_, _, det_b) = char_poly(&b);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    [lo, mid, hi]
}

/// Brute-force roots: scan for sign changes of the characteristic polynomial
/// on a fine grid inside the Gershgorin bound, then bisect.
pub fn bisection_eigenvalues(m: &[[f64; 3]; 3]) -> Vec<f64> {
    let bound = (0..3)
        .map(|r| (0..3).map(|c| m[r][c].abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1e-9;
    let n = 200_000;
    let f = |x: f64| char_poly_eval(m, x);
    let mut roots = Vec::new();
    let mut x0 = -bound;
    let mut f0 = f(x0);
    for k in 1..=n {
        let x1 = -bound + 2.0 * bound * k as f64 / n as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            let (mut a, mut b, mut fa) = (x0, x1, f0);
            for _ in 0..200 {
                let c = 0.5 * (a + b);
                let fc = f(c);
                if fc == 0.0 {
                    a = c;
                    b = c;
                    break;
                }
                if fa * fc < 0.0 {
                    b = c;
                } else {
                    a = c;
                    fa = fc;
                }
            }
            roots.push(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Unit eigenvector for a simple eigenvalue via the cross product of two rows
/// of `m - λI`, signed with the largest component positive.
pub fn cross_eigenvector(m: &[[f64; 3]; 3], lambda: f64) -> [f64; 3] {
    let mut a = *m;
    for k in 0..3 {
        a[k][k] -= lambda;
    }
    let cross = |u: [f64; 3], v: [f64; 3]| {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    };
    let cands = [cross(a[0], a[1]), cross(a[0], a[2]), cross(a[1], a[2])];
    let norm = |v: &[f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let best = cands
        .iter()
        .max_by(|x, y| norm(x).total_cmp(&norm(y)))
        .unwrap();
    let n = norm(best);
    let mut v = [best[0] / n, best[1] / n, best[2] / n];
    let lead = (0..3)
        .max_by(|&x, &y| v[x].abs().total_cmp(&v[y].abs()).then(y.cmp(&x)))
        .unwrap();
    if v[lead] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Luminosity matrix from explicit eigenvectors: `L[i][j] = μ² (C_g^j)² (C_XD^i)²`.
pub fn luminosities(vectors: &[[f64; 3]; 3], mu: f64) -> [[f64; 3]; 3] {
    let mut l = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            // ⟨j| d |i⟩ = μ · C_g^j · C_XD^i
            let amp = mu * vectors[j][0] * vectors[i][1];
            l[i][j] = amp * amp;
        }
    }
    l
}

/// Closed-form dressed states at Δ = δ_L = 0, t = g√n = c:
/// energies (-√2 c, 0, √2 c) with eigenvectors (1/2, -1/√2, 1/2),
/// (1/√2, 0, -1/√2), (1/2, 1/√2, 1/2), the first flipped so its
/// largest component is positive.
pub fn resonant_closed_form(c: f64) -> ([f64; 3], [[f64; 3]; 3]) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let r = std::f64::consts::SQRT_2 * c;
    (
        [-r, 0.0, r],
        [[-0.5, s, -0.5], [s, 0.0, -s], [0.5, s, 0.5]],
    )
}
