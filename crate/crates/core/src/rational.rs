//! Exact rational scalars and the handful of high-precision numeric helpers
//! (square roots, pi) needed when exact values must be compared against
//! analytic limits.
//!
//! Rationals are always stored reduced with a positive denominator. The wire
//! format is the string `"p/q"`, with the integer shorthand `"p"` accepted on
//! input and emitted whenever `q = 1`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Shorthand constructor, mostly for tests and tables.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or the integer shorthand `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical string form: reduced, positive denominator, integer shorthand.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational_list(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s)).collect()
}

pub fn format_rational_list(items: &[Rational]) -> Vec<String> {
    items.iter().map(format_rational).collect()
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign_of(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Convert to `f64`, scaling through bit lengths so that values far outside
/// the `f64` exponent range still round correctly instead of over/underflowing.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    // Shift so the quotient carries ~80 significant bits, convert, then undo.
    let nbits = r.numer().bits() as i64;
    let dbits = r.denom().bits() as i64;
    let shift = 80 - (nbits - dbits);
    let (num, den) = if shift >= 0 {
        (r.numer() << shift as u64, r.denom().clone())
    } else {
        (r.numer().clone(), r.denom() << (-shift) as u64)
    };
    let q = num.div_floor(&den);
    let q = q.to_f64().unwrap_or(f64::NAN);
    q * 2f64.powi(-shift as i32)
}

/// Exact rational value of a finite `f64` (every finite float is dyadic).
pub fn rational_from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Power with a signed exponent (negative allowed for nonzero bases).
pub fn rational_pow(base: &Rational, exp: i32) -> Rational {
    base.pow(exp)
}

/// Rational approximation of `sqrt(r)` with absolute error at most `2^-bits`.
///
/// Uses the integer floor square root of a scaled numerator, so the result is
/// always a lower bound of the true root.
pub fn sqrt_approx(r: &Rational, bits: u32) -> Rational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^p so 1/(d*2^p) <= 2^-bits.
    let n = r.numer();
    let d = r.denom();
    let p = (bits as u64 + 2).saturating_sub(d.bits().saturating_sub(1)) as u32;
    let scaled = (n * d) << (2 * p as u64);
    let root = scaled.sqrt();
    Rational::new(root, d << (p as u64))
}

/// Rational approximation of pi with absolute error at most `2^-bits`,
/// via Machin's formula `pi = 16*atan(1/5) - 4*atan(1/239)`.
pub fn pi_approx(bits: u32) -> Rational {
    let work = bits + 16;
    let atan_inv = |x: i64| -> Rational {
        // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)); truncation error is
        // below the first omitted term.
        let x2 = BigInt::from(x * x);
        let mut power = BigInt::from(x);
        let mut k = 0u32;
        let mut acc = Rational::zero();
        loop {
            let term = Rational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
            if k % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
            if power.bits() > work as u64 {
                return acc;
            }
            power *= &x2;
            k += 1;
        }
    };
    atan_inv(5) * rat_int(16) - atan_inv(239) * rat_int(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "1/3", "-2/5", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // reduction and sign normalization on input
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn f64_conversion_handles_extreme_magnitudes() {
        let tiny = Rational::new(BigInt::one(), factorial(80));
        let v = rational_to_f64(&tiny);
        assert!(v > 0.0 && v < 1e-100);
        let huge = Rational::from_integer(factorial(80));
        assert!(rational_to_f64(&huge) > 1e100);
        assert!((rational_to_f64(&rat(-3, 4)) + 0.75).abs() < 1e-15);
    }

    #[test]
    fn sqrt_approx_error_bound() {
        let two = rat_int(2);
        let s = sqrt_approx(&two, 100);
        let err = (&s * &s - &two).abs();
        // |s - sqrt(2)| <= 2^-100 implies |s^2 - 2| <= 3 * 2^-100
        assert!(err < rat(3, 1) * Rational::new(BigInt::one(), BigInt::one() << 100));
        assert!((rational_to_f64(&s) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn pi_matches_f64_constant() {
        let p = pi_approx(80);
        assert!((rational_to_f64(&p) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn f64_round_trip_is_exact() {
        for x in [0.5, -1.25, 3.0, 0.1] {
            assert_eq!(rational_to_f64(&rational_from_f64(x)), x);
        }
    }
}
