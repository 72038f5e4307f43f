//! Dense univariate polynomials with exact rational coefficients.
//!
//! This is the carrier type for everything in the crate: Hermite polynomials
//! in both normalizations, their linear combinations, the generalized family
//! built from the backward shift operator, and every auxiliary polynomial
//! (coefficient polynomials, Turan determinants, Sturm chains).
//!
//! Coefficients are stored densely, index = power of x, with no trailing
//! zeros; the zero polynomial is the empty list.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat_int, Rational};

/// Dense exact-coefficient univariate polynomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Build from coefficients (index = power), dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// The backward shift operator `p -> 2x*p - p'`, which raises the Hermite
    /// index by one. Degree increases by exactly one and the leading
    /// coefficient doubles for nonzero input.
    pub fn backward_shift(&self) -> Self {
        let two_x_p = self.scale(&rat_int(2)).shift_up(1);
        &two_x_p - &self.derivative()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a complex rational point `re + im*i`.
    pub fn eval_complex(&self, re: &Rational, im: &Rational) -> (Rational, Rational) {
        let mut acc_re = Rational::zero();
        let mut acc_im = Rational::zero();
        for c in self.coeffs.iter().rev() {
            let new_re = &acc_re * re - &acc_im * im + c;
            let new_im = &acc_re * im + &acc_im * re;
            acc_re = new_re;
            acc_im = new_im;
        }
        (acc_re, acc_im)
    }

    /// Exact composition `p(a*x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over the rationals: `self = q * d + r` with
    /// `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                for i in 0..dd {
                    let t = &factor * &d.coeffs[i];
                    rem[k + i] -= t;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor. Internally runs a primitive-part
    /// polynomial remainder sequence over the integers so coefficient sizes
    /// stay controlled; the rational result is normalized monic.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeroes);
        }
        if self.is_zero() {
            return Ok(other.to_monic());
        }
        if other.is_zero() {
            return Ok(self.to_monic());
        }
        let mut a = IntPoly::from_rational(self).0;
        let mut b = IntPoly::from_rational(other).0;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.signed_pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        Ok(a.to_rational().to_monic())
    }

    pub fn to_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// `p / gcd(p, p')`: shares the distinct roots of `p`, all simple.
    /// Returned monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative())?;
        if g.is_constant() {
            return Ok(self.to_monic());
        }
        Ok(self
            .divide_exact(&g)
            .expect("gcd divides exactly")
            .to_monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.is_constant())
    }

    /// Squarefree decomposition by Yun's algorithm: returns pairs
    /// `(f_i, i)` with `p = lc * prod f_i^i`, each `f_i` monic squarefree of
    /// positive degree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.to_monic();
        if p.is_constant() {
            return Ok(Vec::new());
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp)?;
        let mut b = p.divide_exact(&a0).unwrap();
        let mut c = dp.divide_exact(&a0).unwrap();
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((b.to_monic(), i));
                }
                break;
            }
            let f = b.gcd(&d)?;
            if f.degree().unwrap_or(0) > 0 {
                out.push((f.to_monic(), i));
            }
            b = b.divide_exact(&f).unwrap();
            c = d.divide_exact(&f).unwrap();
            i += 1;
        }
        Ok(out)
    }

    /// Human-readable rendering, highest power first.
    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = format_rational(&c.abs());
            let term = match i {
                0 => abs,
                1 if abs == "1" => "x".to_string(),
                1 => format!("{abs}x"),
                _ if abs == "1" => format!("x^{i}"),
                _ => format!("{abs}x^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({})", self.render())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_rational(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;
        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = RationalPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of rational coefficient strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    coeffs.push(parse_rational(&s).map_err(serde::de::Error::custom)?);
                }
                Ok(RationalPoly::from_coeffs(coeffs))
            }
        }
        deserializer.deserialize_seq(CoeffVisitor)
    }
}

/// Integer polynomial used internally by gcd and Sturm-chain computations.
/// Kept primitive (content 1); only ever divided by positive scalars so the
/// sign pattern matches the rational polynomial it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_rational(p: &RationalPoly) -> (Self, Rational) {
        // p = scale * primitive, scale > 0.
        if p.is_zero() {
            return (Self { coeffs: Vec::new() }, Rational::one());
        }
        let mut lcm = BigInt::one();
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * &lcm / c.denom()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let coeffs = ints.iter().map(|c| c / &content).collect();
        let scale = Rational::new(content, lcm);
        (Self { coeffs }, scale)
    }

    pub fn to_rational(&self) -> RationalPoly {
        RationalPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        let coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    /// Divide by the positive content.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Pseudo-remainder of `self` by `d`, corrected so the result equals a
    /// POSITIVE scalar multiple of the true Euclidean remainder. The bool
    /// reports whether a sign flip was applied.
    pub fn signed_pseudo_rem(&self, d: &Self) -> (Self, bool) {
        let dd = d.degree();
        let lead = d.leading().clone();
        let lead_negative = lead.is_negative();
        let mut rem = self.coeffs.clone();
        let mut mults = 0usize;
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone();
            // rem = rem * lead - top * x^k * d
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for i in 0..=dd {
                let t = &top * &d.coeffs[i];
                rem[k + i] -= t;
            }
            mults += 1;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        let flip = lead_negative && mults % 2 == 1;
        let mut out = Self { coeffs: rem };
        if flip {
            out = Self {
                coeffs: out.coeffs.iter().map(|c| -c).collect(),
            };
        }
        (out, flip)
    }

    /// Sign of the value at the reduced rational `u/v` (`v > 0`), computed
    /// with integer arithmetic only.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let u = x.numer();
        let v = x.denom();
        let d = self.degree();
        let mut acc = self.coeffs[d].clone();
        let mut vp = BigInt::one();
        for i in (0..d).rev() {
            vp *= v;
            acc = acc * u + &self.coeffs[i] * &vp;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.leading().is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }
}
