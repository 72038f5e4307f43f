//! Approximate complex roots by simultaneous (Aberth-Ehrlich) iteration.
//!
//! Real-root certification elsewhere in the crate is exact; this module is
//! the explicitly approximate counterpart used only where the statements
//! being checked are themselves limits. Multiple roots are handled by
//! running the iteration on each squarefree factor and replicating.

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RationalPoly;
use crate::rational::rational_to_f64;

/// One approximate root with its backward-relative residual
/// `|p(z)| / sum_i |p_i| |z|^i` evaluated on the max-normalized polynomial.
/// Converged estimates satisfy `residual <= 1e-9` (typically far smaller).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexRootEstimate {
    pub value: (f64, f64),
    pub residual: f64,
}

impl ComplexRootEstimate {
    pub fn complex(&self) -> Complex64 {
        Complex64::new(self.value.0, self.value.1)
    }
}

const MAX_ITERATIONS: u32 = 400;
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// All `deg p` complex roots at floating-point precision, ordered by the
/// complex lexicographic order (real part, then imaginary part).
///
/// `precision_bits` controls the convergence threshold `2^-min(bits, 47)`;
/// the backing arithmetic is always f64. Errors with the best residual if
/// the iteration fails to settle.
pub fn complex_roots(p: &RationalPoly, precision_bits: u32) -> Result<Vec<ComplexRootEstimate>> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(Vec::new());
    }
    let eps = 2f64.powi(-(precision_bits.min(47) as i32));

    // Iterate per squarefree factor: all roots simple there, so convergence
    // is quadratic even when the input has multiple roots.
    let mut all: Vec<Complex64> = Vec::with_capacity(degree);
    for (factor, mult) in p.squarefree_decomposition()? {
        let coeffs = normalized_f64_coeffs(&factor);
        let roots = aberth_simple(&coeffs, eps)?;
        for root in roots {
            for _ in 0..mult {
                all.push(root);
            }
        }
    }
    debug_assert_eq!(all.len(), degree);
    all.sort_by(|a, b| {
        a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
    });

    let normalized = normalized_f64_coeffs(p);
    Ok(all
        .into_iter()
        .map(|z| ComplexRootEstimate {
            value: (z.re, z.im),
            residual: backward_residual(&normalized, z),
        })
        .collect())
}

/// Coefficients scaled by the largest absolute value, exactly in rational
/// arithmetic, so the f64 conversion cannot over- or underflow.
fn normalized_f64_coeffs(p: &RationalPoly) -> Vec<f64> {
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .expect("nonzero polynomial");
    p.coeffs()
        .iter()
        .map(|c| rational_to_f64(&(c / &max)))
        .collect()
}

fn backward_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let mut value = Complex64::zero();
    let mut scale = 0.0f64;
    let mut zpow = 1.0f64;
    let r = z.norm();
    for (i, &c) in coeffs.iter().enumerate() {
        if i > 0 {
            zpow *= r;
        }
        scale += c.abs() * zpow;
        value = value * z + coeffs[coeffs.len() - 1 - i];
    }
    // value accumulated highest-first
    if scale == 0.0 {
        return value.norm();
    }
    value.norm() / scale
}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

fn seed_radius(coeffs: &[f64]) -> f64 {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].abs();
    let mut r: f64 = 0.0;
    for (i, &c) in coeffs.iter().enumerate().take(d) {
        if c != 0.0 {
            r = r.max(2.0 * (c.abs() / lead).powf(1.0 / (d - i) as f64));
        }
    }
    if r == 0.0 {
        1.0
    } else {
        r
    }
}

/// Aberth-Ehrlich on a squarefree polynomial given by normalized f64
/// coefficients, constant term first.
fn aberth_simple(coeffs: &[f64], eps: f64) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    if d == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)]);
    }
    let radius = seed_radius(coeffs);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            // angular offset keeps seeds off the axes and asymmetric
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (d as f64) + 0.3967;
            radius * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    let mut best_residual = f64::INFINITY;
    for _iter in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for j in 0..d {
            let (value, deriv) = horner_with_derivative(coeffs, z[j]);
            if value.is_zero() {
                continue;
            }
            let w = if deriv.is_zero() {
                // nudge off a critical point
                Complex64::new(eps.sqrt(), eps.sqrt())
            } else {
                value / deriv
            };
            let mut repulsion = Complex64::zero();
            for (k, zk) in z.iter().enumerate() {
                if k != j {
                    let diff = z[j] - zk;
                    if !diff.is_zero() {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * repulsion;
            let correction = if denom.is_zero() { w } else { w / denom };
            z[j] -= correction;
            let rel = correction.norm() / (1.0 + z[j].norm());
            max_step = max_step.max(rel);
        }
        // Converged when every backward residual is tiny; the correction
        // size alone can limit-cycle at a few ulps on spread-out roots.
        let worst = z
            .iter()
            .map(|&zj| backward_residual(coeffs, zj))
            .fold(0.0f64, f64::max);
        best_residual = best_residual.min(worst);
        if worst <= 1e-13 || (max_step <= eps && worst <= RESIDUAL_TOLERANCE) {
            return Ok(z);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
        best_residual,
    })
}
