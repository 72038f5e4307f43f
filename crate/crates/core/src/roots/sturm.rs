//! Sturm chains over exact integer arithmetic.
//!
//! The chain is built for the squarefree part of the input, as a primitive
//! polynomial remainder sequence: each remainder is reduced to its integer
//! primitive part (a positive scalar rescaling, which leaves every sign
//! pattern intact) so coefficient growth stays polynomial instead of
//! exponential. Sign-variation differences then count distinct real roots in
//! half-open intervals `(a, b]`, with `a`, `b` allowed to be infinite.

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RationalPoly};
use crate::rational::Rational;

/// Endpoint for root counting: a rational number or a signed infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn strictly_less(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (_, Bound::NegInf) | (Bound::PosInf, _) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

/// Sturm chain of the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<IntPoly>,
    squarefree: RationalPoly,
}

impl SturmChain {
    /// Build the chain. Errors on the zero polynomial.
    pub fn new(p: &RationalPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Ok(SturmChain {
                chain: vec![IntPoly::from_rational(p).0],
                squarefree: RationalPoly::one(),
            });
        }
        let (ipoly, _) = IntPoly::from_rational(p);
        let chain = Self::build_chain(ipoly.clone());
        // The chain terminates at (a scalar multiple of) gcd(p, p'). If that
        // gcd is non-constant the input was not squarefree: rebuild on the
        // squarefree part so variation counts mean "distinct roots".
        let last = chain.last().expect("nonempty chain");
        if last.degree() > 0 {
            let sf = p.squarefree_part()?;
            let (isf, _) = IntPoly::from_rational(&sf);
            let chain = Self::build_chain(isf);
            debug_assert!(chain.last().unwrap().degree() == 0);
            return Ok(SturmChain {
                chain,
                squarefree: sf,
            });
        }
        Ok(SturmChain {
            chain,
            squarefree: ipoly.to_rational().to_monic(),
        })
    }

    fn build_chain(p: IntPoly) -> Vec<IntPoly> {
        let dp = p.derivative().primitive_part();
        let mut chain = vec![p, dp];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].degree() == 0 {
                break;
            }
            let (rem, _) = chain[n - 2].signed_pseudo_rem(&chain[n - 1]);
            if rem.is_zero() {
                break;
            }
            let neg = IntPoly {
                coeffs: rem.primitive_part().coeffs.iter().map(|c| -c).collect(),
            };
            chain.push(neg);
        }
        chain
    }

    /// Monic squarefree part of the original polynomial.
    pub fn squarefree(&self) -> &RationalPoly {
        &self.squarefree
    }

    /// Sign of the squarefree part at a rational point.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        self.chain[0].sign_at(x)
    }

    /// Number of sign variations of the chain at a point, zeros dropped.
    pub fn variations_at(&self, at: &Bound) -> usize {
        let mut last: i8 = 0;
        let mut variations = 0;
        for poly in &self.chain {
            let s = match at {
                Bound::NegInf => poly.sign_at_neg_inf(),
                Bound::PosInf => poly.sign_at_pos_inf(),
                Bound::Finite(x) => poly.sign_at(x),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
        variations
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Bound, b: &Bound) -> Result<usize> {
        if !a.strictly_less(b) {
            return Err(Error::InvalidInterval(format!(
                "bounds not ordered: {a:?} !< {b:?}"
            )));
        }
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        debug_assert!(va >= vb, "sign variations must not increase");
        Ok(va.saturating_sub(vb))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.count_half_open(&Bound::NegInf, &Bound::PosInf)
            .expect("infinite bounds are ordered")
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
///
/// `a` and `b` may be infinite; signs at infinity come from leading
/// coefficients. Errors on the zero polynomial or unordered bounds.
pub fn sturm_count(p: &RationalPoly, a: &Bound, b: &Bound) -> Result<usize> {
    SturmChain::new(p)?.count_half_open(a, b)
}

/// Distinct real roots of `p` over the whole real line.
pub fn distinct_real_zeros(p: &RationalPoly) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_all())
}

/// Real roots of `p` counted with multiplicity.
pub fn real_zero_count(p: &RationalPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(0);
    }
    if p.is_squarefree()? {
        return distinct_real_zeros(p);
    }
    let mut total = 0;
    for (factor, mult) in p.squarefree_decomposition()? {
        total += mult * distinct_real_zeros(&factor)?;
    }
    Ok(total)
}

/// Non-real roots of `p` counted with multiplicity (always even).
pub fn nonreal_zero_count(p: &RationalPoly) -> Result<usize> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let real = real_zero_count(p)?;
    let nonreal = d - real;
    debug_assert!(nonreal % 2 == 0);
    Ok(nonreal)
}
