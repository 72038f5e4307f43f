//! Dyadic rationals (`m * 2^e`) and the isolating intervals built from them.
//!
//! Dyadic endpoints keep bisection exact: midpoints, widths and sign
//! evaluations never leave the rationals. Wire format is the string
//! `"m*2^e"` with odd mantissa (or `"0*2^0"`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{rational_to_f64, Rational};

/// Exact dyadic rational `mantissa * 2^exponent`, stored with odd mantissa.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    /// 2^e.
    pub fn power_of_two(e: i64) -> Self {
        Self::new(BigInt::one(), e)
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        while self.mantissa.is_even() {
            self.mantissa /= 2;
            self.exponent += 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            Rational::new(self.mantissa.clone(), BigInt::one() << (-self.exponent) as u64)
        }
    }

    /// Exact dyadic from a rational with power-of-two denominator.
    pub fn from_rational_exact(r: &Rational) -> Option<Self> {
        let den = r.denom();
        if den.is_one() {
            return Some(Dyadic::new(r.numer().clone(), 0));
        }
        // power of two iff den = 2^k
        let k = den.trailing_zeros()?;
        if &(BigInt::one() << k) != den {
            return None;
        }
        Some(Dyadic::new(r.numer().clone(), -(k as i64)))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.to_rational())
    }

    /// Exact midpoint of two dyadics.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exponent.min(b.exponent);
        let ma = &a.mantissa << (a.exponent - e) as u64;
        let mb = &b.mantissa << (b.exponent - e) as u64;
        Dyadic::new(ma + mb, e - 1)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.min(other.exponent);
        let ma = &self.mantissa << (self.exponent - e) as u64;
        let mb = &other.mantissa << (other.exponent - e) as u64;
        ma.cmp(&mb)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} ~ {})", self, self.to_f64())
    }
}

impl FromStr for Dyadic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (m, e) = s
            .split_once("*2^")
            .ok_or_else(|| Error::Parse(format!("invalid dyadic {s:?}")))?;
        let mantissa: BigInt = m
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid dyadic mantissa in {s:?}")))?;
        let exponent: i64 = e
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid dyadic exponent in {s:?}")))?;
        Ok(Dyadic::new(mantissa, exponent))
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Isolating interval with exact dyadic endpoints; serialized as the pair
/// `["m*2^e", "m*2^e"]`.
///
/// Two shapes occur:
/// - a point interval (`lower == upper`): the root is exactly that dyadic;
/// - an open interval (`lower < upper`): the isolated root lies strictly
///   between the endpoints and the polynomial is nonzero at both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lower: Dyadic,
    pub upper: Dyadic,
}

impl Serialize for DyadicInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.lower, &self.upper).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DyadicInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (lower, upper) = <(Dyadic, Dyadic)>::deserialize(deserializer)?;
        DyadicInterval::new(lower, upper).map_err(serde::de::Error::custom)
    }
}

impl DyadicInterval {
    pub fn new(lower: Dyadic, upper: Dyadic) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidInterval(format!(
                "lower {lower} exceeds upper {upper}"
            )));
        }
        Ok(DyadicInterval { lower, upper })
    }

    pub fn point(value: Dyadic) -> Self {
        DyadicInterval {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> Rational {
        self.upper.to_rational() - self.lower.to_rational()
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lower, &self.upper)
    }

    pub fn mid_f64(&self) -> f64 {
        rational_to_f64(&((self.lower.to_rational() + self.upper.to_rational()) / Rational::from_integer(2.into())))
    }

    /// Whole interval strictly left of the other (no shared interior point;
    /// touching endpoints are fine because open intervals exclude them and a
    /// point interval touching an open one is still strictly separated).
    pub fn strictly_left_of(&self, other: &DyadicInterval) -> bool {
        match self.upper.cmp(&other.lower) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => !(self.is_point() && other.is_point()),
        }
    }

    /// True when the two intervals could still contain the same real number.
    pub fn overlaps(&self, other: &DyadicInterval) -> bool {
        !self.strictly_left_of(other) && !other.strictly_left_of(self)
    }
}
