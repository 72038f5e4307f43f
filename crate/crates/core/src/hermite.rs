//! The Hermite family in both normalizations and finite linear combinations
//! of consecutive members.
//!
//! `hermite(n)` is the classical polynomial with leading coefficient `2^n`,
//! generated by iterating the backward shift `p -> 2x p - p'` from 1 and
//! memoized. `hermite_normalized(n)` divides by `2^n n!`, which turns the
//! combinations `q_n = sum gamma_j H~_{n-j}` into an Appell sequence
//! (`q_n' = q_{n-1}`). The coefficient polynomial `P(x) = sum gamma_j x^(K-j)`
//! and the series polynomial `R(x) = sum gamma_j x^j` drive all the zero
//! structure downstream.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RationalPoly;
use crate::rational::{factorial, format_rational, parse_rational, Rational};

static CACHE: OnceLock<Mutex<Vec<RationalPoly>>> = OnceLock::new();

/// Classical Hermite polynomial `H_n`: integer coefficients, degree `n`,
/// leading coefficient `2^n`. Memoized across calls.
pub fn hermite(n: usize) -> RationalPoly {
    let cache = CACHE.get_or_init(|| Mutex::new(vec![RationalPoly::one()]));
    let mut table = cache.lock().expect("hermite cache poisoned");
    while table.len() <= n {
        let next = table.last().unwrap().backward_shift();
        table.push(next);
    }
    table[n].clone()
}

/// Normalized Hermite polynomial `H_n / (2^n n!)`, leading coefficient `1/n!`.
pub fn hermite_normalized(n: usize) -> RationalPoly {
    let scale = Rational::new(BigInt::one(), (BigInt::one() << n) * factorial(n));
    hermite(n).scale(&scale)
}

/// Which normalization a combination is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Standard,
    Appell,
}

impl std::fmt::Display for Normalization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Normalization::Standard => write!(f, "standard"),
            Normalization::Appell => write!(f, "appell"),
        }
    }
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Normalization::Standard),
            "appell" => Ok(Normalization::Appell),
            other => Err(Error::Parse(format!("unknown normalization {other:?}"))),
        }
    }
}

/// Coefficients `gamma_0..gamma_K` of a combination of `K+1` consecutive
/// Hermite polynomials. Always `gamma_0 = 1` and, for `K >= 1`,
/// `gamma_K != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationSpec {
    gamma: Vec<Rational>,
}

impl CombinationSpec {
    pub fn new(gamma: Vec<Rational>) -> Result<Self> {
        if gamma.is_empty() {
            return Err(Error::InvalidSpec("gamma must be nonempty".to_string()));
        }
        if !gamma[0].is_one() {
            return Err(Error::InvalidSpec(format!(
                "gamma_0 must be 1, got {}",
                format_rational(&gamma[0])
            )));
        }
        if gamma.len() > 1 && gamma.last().unwrap().is_zero() {
            return Err(Error::InvalidSpec("gamma_K must be nonzero".to_string()));
        }
        Ok(CombinationSpec { gamma })
    }

    pub fn from_strs(items: &[&str]) -> Result<Self> {
        Self::new(items.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?)
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    /// K, the number of lower neighbors mixed in.
    pub fn order(&self) -> usize {
        self.gamma.len() - 1
    }

    /// `P(x) = sum_j gamma_j x^(K-j)`; its zeros control real-rootedness of
    /// the combinations.
    pub fn coefficient_poly(&self) -> RationalPoly {
        let k = self.order();
        let mut coeffs = vec![Rational::zero(); k + 1];
        for (j, g) in self.gamma.iter().enumerate() {
            coeffs[k - j] = g.clone();
        }
        RationalPoly::from_coeffs(coeffs)
    }

    /// `R(x) = sum_j gamma_j x^j = x^K P(1/x)`, the factor in the generating
    /// function.
    pub fn series_poly(&self) -> RationalPoly {
        RationalPoly::from_coeffs(self.gamma.clone())
    }
}

/// The combination `q_n` in the requested normalization.
///
/// Standard: `q_n = sum gamma_j H_{n-j}`, defined for `n >= K` (degree `n`,
/// leading coefficient `2^n`). Appell: `q_n = sum gamma_j H~_{n-j}` with
/// negative-index terms dropped, defined for every `n >= 0` (degree `n`,
/// leading coefficient `1/n!`).
pub fn combination(
    spec: &CombinationSpec,
    normalization: Normalization,
    n: usize,
) -> Result<RationalPoly> {
    let k = spec.order();
    if normalization == Normalization::Standard && n < k {
        return Err(Error::IndexUnderflow { n, k });
    }
    let mut acc = RationalPoly::zero();
    for (j, g) in spec.gamma().iter().enumerate() {
        if g.is_zero() || j > n {
            continue;
        }
        let term = match normalization {
            Normalization::Standard => hermite(n - j),
            Normalization::Appell => hermite_normalized(n - j),
        };
        acc = &acc + &term.scale(g);
    }
    Ok(acc)
}

/// Does the Appell combination satisfy `q_n' = q_{n-1}` exactly? Always
/// true; a false return signals an implementation bug.
pub fn appell_check(spec: &CombinationSpec, n: usize) -> bool {
    assert!(n >= 1, "appell_check needs n >= 1");
    let qn = combination(spec, Normalization::Appell, n).expect("appell always defined");
    let qprev = combination(spec, Normalization::Appell, n - 1).expect("appell always defined");
    qn.derivative() == qprev
}

/// Coefficients of `z^0..z^n_max` in the truncated series
/// `e^(xz - z^2/4) R(z)`, each a polynomial in `x`.
///
/// This expands the exponential directly from factorials, so it is an
/// independent construction of the Appell combinations: term-by-term
/// agreement with [`combination`] is an end-to-end exact oracle.
pub fn generating_series(spec: &CombinationSpec, n_max: usize) -> Vec<RationalPoly> {
    // e^(xz - z^2/4) = sum_m e_m(x) z^m with
    // e_m(x) = sum_{2b <= m} (-1/4)^b x^(m-2b) / (b! (m-2b)!)
    let quarter = Rational::new(BigInt::from(-1), BigInt::from(4));
    let mut exp_coeffs = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let mut coeffs = vec![Rational::zero(); m + 1];
        let mut quarter_pow = Rational::one();
        for b in 0..=(m / 2) {
            let denom = factorial(b) * factorial(m - 2 * b);
            coeffs[m - 2 * b] = &quarter_pow / Rational::from_integer(denom);
            quarter_pow *= &quarter;
        }
        exp_coeffs.push(RationalPoly::from_coeffs(coeffs));
    }
    (0..=n_max)
        .map(|n| {
            let mut acc = RationalPoly::zero();
            for (j, g) in spec.gamma().iter().enumerate() {
                if j <= n && !g.is_zero() {
                    acc = &acc + &exp_coeffs[n - j].scale(g);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn hermite_base_cases() {
        assert_eq!(hermite(0), RationalPoly::one());
        assert_eq!(hermite(1), p(&[0, 2]));
        assert_eq!(hermite(2), p(&[-2, 0, 4]));
        assert_eq!(hermite(3), p(&[0, -12, 0, 8]));
        assert_eq!(hermite(4), p(&[12, 0, -48, 0, 16]));
    }

    #[test]
    fn hermite_normalized_values() {
        assert_eq!(hermite_normalized(0), RationalPoly::one());
        assert_eq!(
            hermite_normalized(2),
            RationalPoly::from_coeffs(vec![rat(-1, 4), rat_int(0), rat(1, 2)])
        );
        assert_eq!(
            hermite_normalized(3),
            RationalPoly::from_coeffs(vec![rat_int(0), rat(-1, 4), rat_int(0), rat(1, 6)])
        );
    }

    #[test]
    fn hermite_lowering_identity() {
        // H_n' = 2n H_{n-1}
        for n in 1..=30 {
            assert_eq!(
                hermite(n).derivative(),
                hermite(n - 1).scale(&rat_int(2 * n as i64))
            );
        }
    }

    #[test]
    fn hermite_at_origin() {
        // H_{2m}(0) = (-1)^m (2m)!/m!, H_odd(0) = 0
        for m in 0..=15usize {
            let even = hermite(2 * m).eval(&Rational::zero());
            let expect = Rational::from_integer(factorial(2 * m) / factorial(m))
                * if m % 2 == 1 { rat_int(-1) } else { rat_int(1) };
            assert_eq!(even, expect);
            assert_eq!(hermite(2 * m + 1).eval(&Rational::zero()), Rational::zero());
        }
    }

    #[test]
    fn spec_validation() {
        assert!(CombinationSpec::from_strs(&["1", "0", "1"]).is_ok());
        assert!(CombinationSpec::from_strs(&["1"]).is_ok());
        assert!(CombinationSpec::from_strs(&["2", "1"]).is_err());
        assert!(CombinationSpec::from_strs(&["1", "0"]).is_err());
        assert!(CombinationSpec::new(vec![]).is_err());
    }

    #[test]
    fn coefficient_and_series_polys() {
        let spec = CombinationSpec::from_strs(&["1", "-2", "1/3"]).unwrap();
        // P = x^2 - 2x + 1/3
        assert_eq!(
            spec.coefficient_poly(),
            RationalPoly::from_coeffs(vec![rat(1, 3), rat_int(-2), rat_int(1)])
        );
        // R = 1 - 2x + x^2/3
        assert_eq!(
            spec.series_poly(),
            RationalPoly::from_coeffs(vec![rat_int(1), rat_int(-2), rat(1, 3)])
        );
    }

    #[test]
    fn standard_combination_values() {
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        // H_2 - H_1 = 4x^2 - 2x - 2
        assert_eq!(
            combination(&spec, Normalization::Standard, 2).unwrap(),
            p(&[-2, -2, 4])
        );
        assert!(matches!(
            combination(&spec, Normalization::Standard, 0),
            Err(Error::IndexUnderflow { .. })
        ));
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        assert_eq!(
            combination(&pure, Normalization::Standard, 5).unwrap(),
            hermite(5)
        );
        assert_eq!(
            combination(&pure, Normalization::Appell, 5).unwrap(),
            hermite_normalized(5)
        );
    }

    #[test]
    fn appell_combination_drops_negative_indices() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        // q_2 = H~_2 + H~_0 = x^2/2 + 3/4
        assert_eq!(
            combination(&spec, Normalization::Appell, 2).unwrap(),
            RationalPoly::from_coeffs(vec![rat(3, 4), rat_int(0), rat(1, 2)])
        );
        // q_0 = H~_0 = 1
        assert_eq!(
            combination(&spec, Normalization::Appell, 0).unwrap(),
            RationalPoly::one()
        );
        // q_1 = H~_1 = x
        assert_eq!(
            combination(&spec, Normalization::Appell, 1).unwrap(),
            RationalPoly::x()
        );
    }

    #[test]
    fn appell_property_holds() {
        for gamma in [
            vec!["1"],
            vec!["1", "0", "1"],
            vec!["1", "-1"],
            vec!["1", "1/2", "-3", "1/7"],
        ] {
            let spec = CombinationSpec::from_strs(&gamma).unwrap();
            for n in 1..=30 {
                assert!(appell_check(&spec, n), "gamma={gamma:?} n={n}");
            }
        }
    }

    #[test]
    fn generating_series_matches_combinations() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let series = generating_series(&spec, 12);
        // coefficient of z^2 is x^2/2 + 3/4
        assert_eq!(
            series[2],
            RationalPoly::from_coeffs(vec![rat(3, 4), rat_int(0), rat(1, 2)])
        );
        for (n, term) in series.iter().enumerate() {
            assert_eq!(
                term,
                &combination(&spec, Normalization::Appell, n).unwrap(),
                "mismatch at n={n}"
            );
        }
        // first-order coefficient for gamma = [1, c] is x + c
        let spec2 = CombinationSpec::from_strs(&["1", "5/3"]).unwrap();
        let series2 = generating_series(&spec2, 3);
        assert_eq!(
            series2[1],
            RationalPoly::from_coeffs(vec![rat(5, 3), rat_int(1)])
        );
        // pure Hermite z^2 coefficient is H~_2
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        assert_eq!(generating_series(&pure, 2)[2], hermite_normalized(2));
    }

    #[test]
    fn standard_combination_satisfies_shift_recurrence() {
        let spec = CombinationSpec::from_strs(&["1", "2", "-1/2"]).unwrap();
        for n in 2..=25 {
            let qn = combination(&spec, Normalization::Standard, n).unwrap();
            let qnext = combination(&spec, Normalization::Standard, n + 1).unwrap();
            assert_eq!(qn.backward_shift(), qnext);
        }
    }
}
