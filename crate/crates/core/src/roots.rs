//! All complex roots of a polynomial by Durand–Kerner (Weierstrass) iteration.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 500;
pub const UPDATE_TOL: f64 = 1e-13;

const ANGLE_OFFSET: f64 = 0.4;

/// Horner evaluation, coefficients ascending.
pub fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Running-error bound for Horner: `Σ |c_k| |z|^k`.
fn abs_poly(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

/// Roots with multiplicity of `Σ c_k b^k` (coefficients ascending).
///
/// Trailing zero coefficients are trimmed; a constant nonzero polynomial has no
/// roots. Initial guesses lie on a circle of radius `1 + max|c_k| / |c_n|` at
/// angles `2πk/n + 0.4`, so the result is deterministic.
///
/// A root is accepted when its last update is `<= 1e-13 (1 + |z|)` or its
/// residual is already at the rounding level of Horner's scheme; the second
/// test lets clustered and multiple roots terminate.
pub fn roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut trimmed = coeffs.to_vec();
    while trimmed.last().is_some_and(|c| c.norm() == 0.0) {
        trimmed.pop();
    }
    if trimmed.is_empty() {
        return Err(Error::DegeneratePolynomial);
    }
    let degree = trimmed.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }
    let lead = trimmed[degree];
    let monic: Vec<Complex64> = trimmed.iter().map(|c| c / lead).collect();
    if degree == 1 {
        return Ok(vec![-monic[0]]);
    }

    let bound = 1.0 + trimmed[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max) / lead.norm();
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| Complex64::from_polar(bound, 2.0 * PI * k as f64 / degree as f64 + ANGLE_OFFSET))
        .collect();

    let n = degree as f64;
    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for k in 0..degree {
            let value = eval_poly(&monic, z[k]);
            let rounding = 4.0 * n * f64::EPSILON * abs_poly(&monic, z[k]);
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge apart
                let nudge = Complex64::from_polar(1e-8 * (1.0 + z[k].norm()), k as f64);
                z[k] += nudge;
                converged = false;
                continue;
            }
            let delta = value / denom;
            z[k] -= delta;
            let settled = delta.norm() <= UPDATE_TOL * (1.0 + z[k].norm()) || value.norm() <= rounding;
            converged &= settled;
        }
        if converged {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS })
}
