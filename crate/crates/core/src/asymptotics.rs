//! Numerical verification of the limit theorems: Mehler-Heine formulas, the
//! Appell scaling limit, central/edge/non-real zero asymptotics, and the
//! semicircle statistic.
//!
//! Floating point appears only at the final comparison. Scaled Hermite
//! values are computed by exact rational Horner evaluation at a
//! high-precision rational approximation of the (generally irrational)
//! argument, so the catastrophic cancellation of naive double evaluation
//! (coefficients of `H_80` exceed 1e60) never arises.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::{combination, hermite, CombinationSpec, Normalization};
use crate::poly::RationalPoly;
use crate::rational::{
    factorial, pi_approx, rat_int, rational_from_f64, rational_to_f64, sqrt_approx, Rational,
};
use crate::roots::isolate::{isolate, refine_with_chain};
use crate::roots::{analyze, complex_roots, real_zero_count, SturmChain};

/// Working precision for rational approximations of irrational scale
/// factors and arguments.
const APPROX_BITS: u32 = 192;

/// Refinement precision for zeros entering floating comparisons.
const REFINE_BITS: u32 = 53;

/// One limit comparison: observed value against the analytic target.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LimitCheck {
    pub n: usize,
    pub target: f64,
    pub observed: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub passes: bool,
}

impl LimitCheck {
    pub fn new(n: usize, target: f64, observed: f64, tolerance: f64) -> Self {
        let abs_error = (observed - target).abs();
        LimitCheck {
            n,
            target,
            observed,
            abs_error,
            tolerance,
            passes: abs_error <= tolerance,
        }
    }

    /// CSV row `n,observed,target,abs_error`.
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.n, self.observed, self.target, self.abs_error)
    }
}

/// Default tolerance schedule `max(0.05, 0.3/sqrt(n))`. The constant was
/// calibrated once on pure Hermite Mehler-Heine errors (O(1/n) classically;
/// the square root is conservative).
pub fn default_tolerance(n: usize) -> f64 {
    (0.3 / (n as f64).sqrt()).max(0.05)
}

/// Parity selector for the Mehler-Heine formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MehlerParity {
    Even,
    Odd,
}

/// Exact-rational value of the scaled Hermite expression before floating:
/// even parity `(-1)^n sqrt(n pi)/(2^(2n) n!) H_2n(x/(2 sqrt n))`, odd
/// parity `(-1)^n sqrt(pi)/(2^(2n+1) n!) H_(2n+1)(x/(2 sqrt n))`, with the
/// square roots replaced by `2^-bits` rational approximations.
pub fn mehler_heine_rational(
    n: usize,
    x: &Rational,
    parity: MehlerParity,
    bits: u32,
) -> Rational {
    assert!(n >= 1, "Mehler-Heine needs n >= 1");
    let sqrt_n = sqrt_approx(&rat_int(n as i64), bits);
    let arg = x / (rat_int(2) * &sqrt_n);
    let pi = pi_approx(bits);
    let sign = if n % 2 == 1 { rat_int(-1) } else { rat_int(1) };
    match parity {
        MehlerParity::Even => {
            let value = hermite(2 * n).eval(&arg);
            let scale = sqrt_approx(&(pi * rat_int(n as i64)), bits)
                / Rational::from_integer(factorial(n) << (2 * n));
            sign * scale * value
        }
        MehlerParity::Odd => {
            let value = hermite(2 * n + 1).eval(&arg);
            let scale =
                sqrt_approx(&pi, bits) / Rational::from_integer(factorial(n) << (2 * n + 1));
            sign * scale * value
        }
    }
}

/// Mehler-Heine limit at the point `x`: the scaled `H_2n` (even) tends to
/// `cos x`, the scaled `H_(2n+1)` (odd) to `sin x`.
pub fn mehler_heine(n: usize, x: f64, parity: MehlerParity) -> LimitCheck {
    let x_rat = rational_from_f64(x);
    let observed = mehler_heine_rational(n, &x_rat, parity, APPROX_BITS);
    let target = match parity {
        MehlerParity::Even => x.cos(),
        MehlerParity::Odd => x.sin(),
    };
    LimitCheck::new(n, target, rational_to_f64(&observed), default_tolerance(n))
}

/// The exact factorial expression `sqrt(n pi) (2n)! / (4^n (n!)^2)` that the
/// even Mehler-Heine value must equal at `x = 0` (cross-check of the
/// evaluation path; the same sqrt approximation is used on both sides).
pub fn mehler_heine_even_at_zero_reference(n: usize, bits: u32) -> Rational {
    let pi = pi_approx(bits);
    let sqrt_npi = sqrt_approx(&(pi * rat_int(n as i64)), bits);
    let nf = factorial(n);
    sqrt_npi * Rational::new(factorial(2 * n), (&nf * &nf) << (2 * n))
}

/// Mehler-Heine generalized to Appell combinations with the `n - K`
/// scaling: for even `n - K` the scaled `q_n(x / sqrt(2(n-K)))` tends to
/// `gamma_K cos x`, for odd to `gamma_K sin x`.
pub fn combination_mehler_heine(
    spec: &CombinationSpec,
    n: usize,
    x: f64,
) -> Result<LimitCheck> {
    let k = spec.order();
    if n <= k {
        return Err(Error::IndexOutOfRange(format!(
            "need n > K for the (n - K) scaling, got n = {n}, K = {k}"
        )));
    }
    let m = n - k;
    let x_rat = rational_from_f64(x);
    let sqrt_2m = sqrt_approx(&rat_int(2 * m as i64), APPROX_BITS);
    let arg = &x_rat / &sqrt_2m;
    let qn = combination(spec, Normalization::Appell, n)?;
    let value = qn.eval(&arg);
    let pi = pi_approx(APPROX_BITS);
    let gamma_k = rational_to_f64(spec.gamma().last().unwrap());
    let (scale, target) = if m % 2 == 0 {
        let sign = if (m / 2) % 2 == 1 { rat_int(-1) } else { rat_int(1) };
        let s = Rational::from_integer(factorial(m))
            * sqrt_approx(&(pi * rat_int(m as i64) / rat_int(2)), APPROX_BITS)
            / (sign * Rational::from_integer(factorial(m / 2)));
        (s, gamma_k * x.cos())
    } else {
        let sign = if ((m - 1) / 2) % 2 == 1 {
            rat_int(-1)
        } else {
            rat_int(1)
        };
        let s = sign * Rational::from_integer(factorial(m)) * sqrt_approx(&pi, APPROX_BITS)
            / Rational::from_integer(factorial((m - 1) / 2));
        (s, gamma_k * x.sin())
    };
    let observed = rational_to_f64(&(scale * value));
    Ok(LimitCheck::new(n, target, observed, default_tolerance(m)))
}

/// Exact complex-rational value of `(z/(n+1))^n n! q_n((n+1)/z)` for a
/// rational point `z = (re, im) != 0`. Exactness means the imaginary part
/// is exactly zero whenever `z` is real.
pub fn appell_scaling_exact(
    spec: &CombinationSpec,
    n: usize,
    z: (&Rational, &Rational),
) -> Result<(Rational, Rational)> {
    let (re, im) = z;
    let norm2 = re * re + im * im;
    if norm2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n_plus_1 = rat_int(n as i64 + 1);
    // (n+1)/z = (n+1) conj(z) / |z|^2
    let arg_re = &n_plus_1 * re / &norm2;
    let arg_im = -(&n_plus_1 * im) / &norm2;
    let qn = combination(spec, Normalization::Appell, n)?;
    let (val_re, val_im) = qn.eval_complex(&arg_re, &arg_im);
    // (z/(n+1))^n by repeated squaring on exact complex pairs
    let base = (re / &n_plus_1, im / &n_plus_1);
    let mut pow = (Rational::one(), Rational::zero());
    let mut sq = base;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            pow = complex_mul(&pow, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = complex_mul(&sq.clone(), &sq);
        }
    }
    let nf = Rational::from_integer(factorial(n));
    let scaled = complex_mul(&pow, &(val_re, val_im));
    Ok((&nf * &scaled.0, &nf * &scaled.1))
}

fn complex_mul(a: &(Rational, Rational), b: &(Rational, Rational)) -> (Rational, Rational) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

/// Scaling limit `(z/(n+1))^n n! q_n((n+1)/z) -> z^K e^(-z^2/4) P(1/z)`.
///
/// The left side is evaluated exactly at the dyadic value of `z` and floated
/// at the end. For real `z` the observed/target fields are the real parts
/// (the exact imaginary part is zero); for complex `z` they are moduli and
/// the error is the modulus of the complex difference.
pub fn appell_scaling(spec: &CombinationSpec, n: usize, z: Complex64) -> Result<LimitCheck> {
    if z.norm() == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let re = rational_from_f64(z.re);
    let im = rational_from_f64(z.im);
    let (lhs_re, lhs_im) = appell_scaling_exact(spec, n, (&re, &im))?;
    let lhs = Complex64::new(rational_to_f64(&lhs_re), rational_to_f64(&lhs_im));
    // right side: z^K e^(-z^2/4) P(1/z)
    let k = spec.order() as i32;
    let p_coeffs: Vec<f64> = spec
        .coefficient_poly()
        .coeffs()
        .iter()
        .map(rational_to_f64)
        .collect();
    let inv = z.inv();
    let mut p_val = Complex64::zero();
    for c in p_coeffs.iter().rev() {
        p_val = p_val * inv + c;
    }
    let rhs = z.powi(k) * (-z * z / 4.0).exp() * p_val;
    let tolerance = default_tolerance(n);
    if z.im == 0.0 {
        debug_assert!(lhs_im.is_zero());
        let mut check = LimitCheck::new(n, rhs.re, lhs.re, tolerance);
        check.abs_error = (lhs - rhs).norm();
        check.passes = check.abs_error <= tolerance;
        Ok(check)
    } else {
        let mut check = LimitCheck::new(n, rhs.norm(), lhs.norm(), tolerance);
        check.abs_error = (lhs - rhs).norm();
        check.passes = check.abs_error <= tolerance;
        Ok(check)
    }
}

/// Sorted floating values of all real zeros of `q_n`, refined to
/// `REFINE_BITS`.
fn refined_real_zeros(qn: &RationalPoly) -> Result<Vec<f64>> {
    let chain = SturmChain::new(qn)?;
    let intervals = isolate(&chain)?;
    Ok(intervals
        .iter()
        .map(|iv| refine_with_chain(&chain, iv, REFINE_BITS).mid_f64())
        .collect())
}

fn past_threshold_zeros(
    spec: &CombinationSpec,
    n: usize,
) -> Result<(Vec<f64>, usize /* nonreal of P */)> {
    let k = spec.order();
    let p_nonreal = k - real_zero_count(&spec.coefficient_poly())?;
    let qn = combination(spec, Normalization::Appell, n)?;
    let zeros = refined_real_zeros(&qn)?;
    if zeros.len() as i64 != n as i64 - p_nonreal as i64 {
        return Err(Error::IndexOutOfRange(format!(
            "q_{n} has {} distinct real zeros; expected {} (below threshold or multiple zeros)",
            zeros.len(),
            n as i64 - p_nonreal as i64,
        )));
    }
    Ok((zeros, p_nonreal))
}

/// Central-zero asymptotic: the real zero with index
/// `j + floor((n-K)/2) + N_neg + 1` (1-based, increasing order), scaled by
/// `sqrt(2n)`, tends to `pi/2 + j pi` for even `n - K` and to `j pi` for
/// odd `n - K`.
pub fn central_zero_check(spec: &CombinationSpec, n: usize, j: i64) -> Result<LimitCheck> {
    let k = spec.order();
    let p_report = analyze(&spec.coefficient_poly())?;
    let (zeros, _) = past_threshold_zeros(spec, n)?;
    let index_1based = j + ((n - k) / 2) as i64 + p_report.n_negative as i64 + 1;
    if index_1based < 1 || index_1based > zeros.len() as i64 {
        return Err(Error::IndexOutOfRange(format!(
            "central zero index {index_1based} outside 1..={}",
            zeros.len()
        )));
    }
    let zeta = zeros[(index_1based - 1) as usize];
    let observed = (2.0 * n as f64).sqrt() * zeta;
    let target = if (n - k) % 2 == 0 {
        std::f64::consts::FRAC_PI_2 + j as f64 * std::f64::consts::PI
    } else {
        j as f64 * std::f64::consts::PI
    };
    Ok(LimitCheck::new(n, target, observed, default_tolerance(n)))
}

/// Edge-zero asymptotics: the `N_neg` leftmost real zeros of `q_n` divided
/// by `n+1` tend to the negative zeros of `P`, and the rightmost
/// `K - N_nr - N_neg` tend to its positive zeros. Targets are the refined
/// real zeros of `P` (with multiplicity); an empty list when `P` has no
/// real zeros.
pub fn edge_zero_check(spec: &CombinationSpec, n: usize) -> Result<Vec<LimitCheck>> {
    let k = spec.order();
    let p = spec.coefficient_poly();
    let p_report = analyze(&p)?;
    let chain_p = SturmChain::new(&p)?;
    let mut thetas = Vec::new();
    for (iv, &mult) in p_report
        .real_intervals
        .iter()
        .zip(&p_report.multiplicities)
    {
        let value = refine_with_chain(&chain_p, iv, REFINE_BITS).mid_f64();
        for _ in 0..mult {
            thetas.push(value);
        }
    }
    let (zeros, p_nonreal) = past_threshold_zeros(spec, n)?;
    let n_neg = p_report.n_negative;
    let n_real_p = k - p_nonreal;
    let mut checks = Vec::new();
    let tolerance = default_tolerance(n);
    for j in 1..=n_neg {
        let observed = zeros[j - 1] / (n as f64 + 1.0);
        checks.push(LimitCheck::new(n, thetas[j - 1], observed, tolerance));
    }
    for j in (n_neg + 1)..=n_real_p {
        let observed = zeros[n - k + j - 1] / (n as f64 + 1.0);
        checks.push(LimitCheck::new(n, thetas[j - 1], observed, tolerance));
    }
    Ok(checks)
}

/// Non-real-zero asymptotics: the non-real zeros of `q_n` (complex
/// lexicographic order) divided by `n+1` tend componentwise to the non-real
/// zeros of `P`. Two checks (real and imaginary part) per zero; empty when
/// `P` is real-rooted.
pub fn nonreal_zero_check(spec: &CombinationSpec, n: usize) -> Result<Vec<LimitCheck>> {
    let k = spec.order();
    let p = spec.coefficient_poly();
    let p_nonreal = k - real_zero_count(&p)?;
    if p_nonreal == 0 {
        return Ok(Vec::new());
    }
    let qn = combination(spec, Normalization::Appell, n)?;
    let q_report = analyze(&qn)?;
    if q_report.n_nonreal != p_nonreal {
        return Err(Error::IndexOutOfRange(format!(
            "q_{n} has {} non-real zeros; expected {p_nonreal} (below threshold)",
            q_report.n_nonreal
        )));
    }
    let extract_nonreal = |poly: &RationalPoly, count: usize| -> Result<Vec<Complex64>> {
        let mut roots = complex_roots(poly, 46)?;
        roots.sort_by(|a, b| a.value.1.abs().total_cmp(&b.value.1.abs()));
        let mut nonreal: Vec<Complex64> = roots
            .iter()
            .rev()
            .take(count)
            .map(|r| r.complex())
            .collect();
        // lexicographic (re, im), with a jitter tolerance on the real part
        // so conjugate pairs straddling re = 0 order consistently
        let scale = 1.0 + nonreal.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let tol = 1e-9 * scale;
        nonreal.sort_by(|a, b| {
            if (a.re - b.re).abs() <= tol {
                a.im.total_cmp(&b.im)
            } else {
                a.re.total_cmp(&b.re)
            }
        });
        Ok(nonreal)
    };
    let q_nonreal = extract_nonreal(&qn, p_nonreal)?;
    let p_nonreal_roots = extract_nonreal(&p, p_nonreal)?;
    let tolerance = default_tolerance(n);
    let mut checks = Vec::new();
    for (zq, zp) in q_nonreal.iter().zip(&p_nonreal_roots) {
        let scaled = zq / (n as f64 + 1.0);
        checks.push(LimitCheck::new(n, zp.re, scaled.re, tolerance));
        checks.push(LimitCheck::new(n, zp.im, scaled.im, tolerance));
    }
    Ok(checks)
}

/// Test functions for the semicircle statistic.
#[derive(Clone, Debug, PartialEq)]
pub enum TestFunction {
    /// Constant 1.
    One,
    /// x^2.
    Square,
    /// |x|.
    Abs,
    /// Trapezoid-smoothed indicator: 1 on `[center-halfwidth, center+halfwidth]`,
    /// linear ramp to 0 over `ramp` on both sides.
    Bump {
        center: f64,
        halfwidth: f64,
        ramp: f64,
    },
}

impl TestFunction {
    /// Parse `"1"`, `"x^2"`, `"abs"`, or `"bump:center,halfwidth,ramp"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(TestFunction::One),
            "x^2" => Ok(TestFunction::Square),
            "abs" => Ok(TestFunction::Abs),
            _ => {
                if let Some(rest) = s.strip_prefix("bump:") {
                    let parts: Vec<f64> = rest
                        .split(',')
                        .map(|t| t.trim().parse::<f64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::UnknownTestFunction(s.to_string()))?;
                    if parts.len() == 3 && parts[1] > 0.0 && parts[2] > 0.0 {
                        return Ok(TestFunction::Bump {
                            center: parts[0],
                            halfwidth: parts[1],
                            ramp: parts[2],
                        });
                    }
                }
                Err(Error::UnknownTestFunction(s.to_string()))
            }
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            TestFunction::One => 1.0,
            TestFunction::Square => x * x,
            TestFunction::Abs => x.abs(),
            TestFunction::Bump {
                center,
                halfwidth,
                ramp,
            } => {
                let d = (x - center).abs();
                if d <= *halfwidth {
                    1.0
                } else if d >= halfwidth + ramp {
                    0.0
                } else {
                    1.0 - (d - halfwidth) / ramp
                }
            }
        }
    }
}

/// `(2/pi) integral_{-1}^{1} f(x) sqrt(1-x^2) dx`: closed form where
/// available, adaptive Simpson quadrature otherwise.
pub fn semicircle_integral(f: &TestFunction) -> f64 {
    match f {
        TestFunction::One => 1.0,
        TestFunction::Square => 0.25,
        TestFunction::Abs => 4.0 / (3.0 * std::f64::consts::PI),
        TestFunction::Bump { .. } => {
            let density =
                |x: f64| f.eval(x) * (1.0 - x * x).max(0.0).sqrt() * 2.0 / std::f64::consts::PI;
            adaptive_simpson(&density, -1.0, 1.0, 1e-10, 24)
        }
    }
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    let whole = simpson(f, a, b);
    let mid = 0.5 * (a + b);
    let left = simpson(f, a, mid);
    let right = simpson(f, mid, b);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        left + right + (left + right - whole) / 15.0
    } else {
        adaptive_simpson(f, a, mid, tol / 2.0, depth - 1)
            + adaptive_simpson(f, mid, b, tol / 2.0, depth - 1)
    }
}

/// Semicircle statistic `(1/n) sum_j f(zeta_j(n)/sqrt(2n))` over the real
/// zeros of `q_n`, against the semicircle integral. The default tolerance
/// follows the schedule; pass an explicit one to pin it.
pub fn semicircle_statistic(
    spec: &CombinationSpec,
    n: usize,
    f: &TestFunction,
    tolerance: Option<f64>,
) -> Result<LimitCheck> {
    let (zeros, _) = past_threshold_zeros(spec, n)?;
    let scale = (2.0 * n as f64).sqrt();
    let stat: f64 = zeros.iter().map(|z| f.eval(z / scale)).sum::<f64>() / n as f64;
    let target = semicircle_integral(f);
    Ok(LimitCheck::new(
        n,
        target,
        stat,
        tolerance.unwrap_or_else(|| default_tolerance(n)),
    ))
}

/// Are the errors decreasing over the final three checks of a grid?
pub fn errors_decreasing(checks: &[LimitCheck]) -> bool {
    if checks.len() < 3 {
        return false;
    }
    let tail = &checks[checks.len() - 3..];
    tail[0].abs_error > tail[1].abs_error && tail[1].abs_error > tail[2].abs_error
}

#[cfg(test)]
mod tests {
    use super::*;
    #[test]
    fn mehler_heine_even_small_errors_and_decreasing() {
        for &x in &[0.0, 1.0, std::f64::consts::FRAC_PI_2] {
            let grid: Vec<LimitCheck> = [10, 20, 40]
                .iter()
                .map(|&n| mehler_heine(n, x, MehlerParity::Even))
                .collect();
            for c in &grid {
                assert!(c.passes, "x={x} n={} err={}", c.n, c.abs_error);
            }
            assert!(errors_decreasing(&grid), "x={x}");
        }
    }

    #[test]
    fn mehler_heine_odd_tends_to_sine() {
        let c = mehler_heine(20, std::f64::consts::FRAC_PI_2, MehlerParity::Odd);
        assert!((c.target - 1.0).abs() < 1e-12);
        assert!(c.passes, "err = {}", c.abs_error);
    }

    #[test]
    fn mehler_heine_zero_matches_factorial_expression() {
        for n in [5usize, 12, 25] {
            let lhs = mehler_heine_rational(n, &Rational::zero(), MehlerParity::Even, 128);
            let rhs = mehler_heine_even_at_zero_reference(n, 128);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn combination_mehler_heine_hits_gamma_k() {
        // even n - K: limit at x = 0 is gamma_K
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let c = combination_mehler_heine(&spec, 42, 0.0).unwrap();
        assert!((c.target - 1.0).abs() < 1e-12);
        assert!(c.passes, "err = {}", c.abs_error);
        let spec2 = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let c2 = combination_mehler_heine(&spec2, 43, 0.0).unwrap();
        assert!((c2.target + 1.0).abs() < 1e-12);
        assert!(c2.passes, "err = {}", c2.abs_error);
    }

    #[test]
    fn appell_scaling_exact_imaginary_part_vanishes_on_real_axis() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let (re, im) =
            appell_scaling_exact(&spec, 10, (&rat_int(1), &Rational::zero())).unwrap();
        assert!(im.is_zero());
        assert!(!re.is_zero());
        assert!(appell_scaling_exact(&spec, 5, (&Rational::zero(), &Rational::zero())).is_err());
    }

    #[test]
    fn appell_scaling_converges_at_z_one() {
        // gamma = [1]: limit e^{-1/4}
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        let c = appell_scaling(&pure, 40, Complex64::new(1.0, 0.0)).unwrap();
        assert!((c.target - (-0.25f64).exp()).abs() < 1e-12);
        assert!(c.passes, "err = {}", c.abs_error);
        // gamma = [1,0,1]: target 2 e^{-1/4}
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let c2 = appell_scaling(&spec, 40, Complex64::new(1.0, 0.0)).unwrap();
        assert!((c2.target - 2.0 * (-0.25f64).exp()).abs() < 1e-12);
        assert!(c2.passes, "err = {}", c2.abs_error);
    }

    #[test]
    fn appell_scaling_residual_shrinks_as_n_doubles() {
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        let e20 = appell_scaling(&pure, 20, Complex64::new(1.0, 0.0))
            .unwrap()
            .abs_error;
        let e40 = appell_scaling(&pure, 40, Complex64::new(1.0, 0.0))
            .unwrap()
            .abs_error;
        assert!(e40 < e20);
    }

    #[test]
    fn central_zero_of_pure_hermite() {
        // K = 0, n = 20 even, j = 0: sqrt(40) * zeta_11 -> pi/2
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        let c = central_zero_check(&pure, 20, 0).unwrap();
        assert!((c.target - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(c.abs_error < 0.05, "err = {}", c.abs_error);
        // odd n - K, j = 0: the central zero sits at the origin
        let c_odd = central_zero_check(&pure, 21, 0).unwrap();
        assert_eq!(c_odd.target, 0.0);
        assert!(c_odd.observed.abs() < 1e-9);
        // out-of-range index
        assert!(central_zero_check(&pure, 20, 100).is_err());
    }

    #[test]
    fn edge_zero_tracks_p_roots() {
        // gamma = [1,-1]: theta = 1, rightmost zero / (n+1) -> 1
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let checks = edge_zero_check(&spec, 30).unwrap();
        assert_eq!(checks.len(), 1);
        assert!((checks[0].target - 1.0).abs() < 1e-9);
        assert!(checks[0].abs_error < 0.1, "err = {}", checks[0].abs_error);
        // gamma = [1,1]: theta = -1, leftmost zero
        let spec2 = CombinationSpec::from_strs(&["1", "1"]).unwrap();
        let checks2 = edge_zero_check(&spec2, 30).unwrap();
        assert_eq!(checks2.len(), 1);
        assert!((checks2[0].target + 1.0).abs() < 1e-9);
        // K = 0: nothing to track
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        assert!(edge_zero_check(&pure, 10).unwrap().is_empty());
    }

    #[test]
    fn nonreal_zero_scaling_for_x2_plus_1() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let checks = nonreal_zero_check(&spec, 30).unwrap();
        // two zeros, two components each
        assert_eq!(checks.len(), 4);
        // targets are +-i: real parts 0, imaginary parts -1 and 1
        assert!((checks[0].target).abs() < 1e-12);
        assert!((checks[1].target + 1.0).abs() < 1e-12);
        assert!((checks[3].target - 1.0).abs() < 1e-12);
        for c in &checks {
            assert!(c.abs_error < 0.10, "err = {}", c.abs_error);
        }
        // real-rooted P: vacuous
        let spec2 = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        assert!(nonreal_zero_check(&spec2, 10).unwrap().is_empty());
    }

    #[test]
    fn semicircle_statistic_normalization_and_moment() {
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        // f = 1: statistic = (n - N_nr)/n = 1 exactly for pure Hermite
        let c = semicircle_statistic(&pure, 24, &TestFunction::One, None).unwrap();
        assert!((c.observed - 1.0).abs() < 1e-12);
        assert!((c.target - 1.0).abs() < 1e-12);
        // f = x^2 against 1/4
        let c2 = semicircle_statistic(&pure, 30, &TestFunction::Square, Some(0.05)).unwrap();
        assert!((c2.target - 0.25).abs() < 1e-12);
        assert!(c2.passes, "err = {}", c2.abs_error);
    }

    #[test]
    fn bump_integral_matches_quadrature_sanity() {
        // a bump covering everything integrates to ~1
        let f = TestFunction::Bump {
            center: 0.0,
            halfwidth: 2.0,
            ramp: 0.5,
        };
        assert!((semicircle_integral(&f) - 1.0).abs() < 1e-8);
        // symmetric half-window
        let g = TestFunction::Bump {
            center: 0.0,
            halfwidth: 0.5,
            ramp: 0.01,
        };
        let v = semicircle_integral(&g);
        assert!(v > 0.5 && v < 0.75, "v = {v}");
    }

    #[test]
    fn test_function_parsing() {
        assert_eq!(TestFunction::parse("1").unwrap(), TestFunction::One);
        assert_eq!(TestFunction::parse("x^2").unwrap(), TestFunction::Square);
        assert_eq!(TestFunction::parse("abs").unwrap(), TestFunction::Abs);
        assert!(matches!(
            TestFunction::parse("bump:0.5,0.2,0.05").unwrap(),
            TestFunction::Bump { .. }
        ));
        assert!(TestFunction::parse("sin").is_err());
        assert!(TestFunction::parse("bump:1").is_err());
    }

    #[test]
    fn tolerance_schedule_floor() {
        assert_eq!(default_tolerance(100), 0.05);
        assert!(default_tolerance(9) > 0.05);
        let c = LimitCheck::new(4, 1.0, 1.04, 0.05);
        assert!(c.passes);
    }
}
