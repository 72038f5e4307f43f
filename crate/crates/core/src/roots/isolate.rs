//! Certified real-root isolation and refinement.
//!
//! Isolation bisects a dyadic starting box obtained from exact root bounds,
//! using Sturm counts to decide how many roots each half holds. Every
//! emitted interval is either a point (the root is exactly that dyadic
//! number) or an open interval whose endpoints are certified non-roots, so
//! intervals from different polynomials can always be compared after enough
//! refinement.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dyadic::{Dyadic, DyadicInterval};
use crate::error::{Error, Result};
use crate::poly::RationalPoly;
use crate::rational::{sign_of, Rational};
use crate::roots::sturm::{Bound, SturmChain};

/// Certified account of the real and non-real zeros of a polynomial.
///
/// Real zeros are counted with multiplicity in `n_real`, `n_negative`,
/// `n_positive` and `n_zero_at_origin`; `real_intervals` isolates each
/// distinct real zero and `multiplicities` aligns with it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZeroReport {
    pub degree: usize,
    pub real_intervals: Vec<DyadicInterval>,
    pub multiplicities: Vec<usize>,
    pub n_real: usize,
    pub n_nonreal: usize,
    pub n_negative: usize,
    pub n_positive: usize,
    pub n_zero_at_origin: usize,
    pub all_simple: bool,
}

impl ZeroReport {
    /// Number of distinct real zeros.
    pub fn distinct_real(&self) -> usize {
        self.real_intervals.len()
    }

    pub fn real_zeros_simple(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 1)
    }
}

/// Exact dyadic bound B with every root of the chain's polynomial strictly
/// inside (-B, B). Takes the smaller of the Cauchy bound and a
/// Fujiwara-style bound; the latter rescues polynomials whose trailing
/// coefficients dwarf the leading one (the Appell normalization).
fn root_bound(p: &RationalPoly) -> Dyadic {
    let d = p.degree().expect("nonzero polynomial");
    if d == 0 {
        return Dyadic::from_integer(1);
    }
    // exponent e with 2^e >= |r|, from bit lengths
    let log2_upper = |r: &Rational| -> i64 {
        if r.is_zero() {
            return i64::MIN / 2;
        }
        r.numer().bits() as i64 - r.denom().bits() as i64 + 1
    };
    let lead = p.leading().unwrap();
    // Cauchy: 1 + max |a_i / a_d|
    let mut max_ratio = Rational::zero();
    for i in 0..d {
        let ratio = (p.coeff(i) / lead).abs();
        if ratio > max_ratio {
            max_ratio = ratio;
        }
    }
    let cauchy_exp = log2_upper(&(max_ratio + Rational::from_integer(BigInt::from(1))));
    // Fujiwara: 2 * max |a_{d-i}/a_d|^{1/i}
    let mut fuji_exp = i64::MIN / 2;
    for i in 1..=d {
        let c = p.coeff(d - i);
        if c.is_zero() {
            continue;
        }
        let e = log2_upper(&(c / lead).abs());
        let per_root = e.div_euclid(i as i64) + i64::from(e.rem_euclid(i as i64) != 0);
        fuji_exp = fuji_exp.max(per_root);
    }
    let fuji_exp = fuji_exp + 1;
    // extra doubling makes the bound strict
    Dyadic::power_of_two(cauchy_exp.min(fuji_exp).max(0) + 1)
}

/// Disjoint isolating intervals for the distinct real roots of the chain's
/// squarefree part, in increasing order. Each is a point (exact dyadic root)
/// or an open interval whose endpoints are certified non-roots.
pub fn isolate(chain: &SturmChain) -> Result<Vec<DyadicInterval>> {
    let sf = chain.squarefree();
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let bound = root_bound(sf);
    let lo = bound.neg();
    let total = chain.count_all();
    // Bisection on half-open nodes (lo, hi] carrying their root count; a
    // root exactly at a midpoint just stays in the left child.
    let mut stack = vec![(lo, bound, total)];
    let mut out = Vec::new();
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => continue,
            1 => {
                out.push(normalize_single(chain, lo, hi)?);
                continue;
            }
            _ => {}
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        debug_assert!(lo < mid && mid < hi);
        let in_left =
            chain.count_half_open(&Bound::Finite(lo.to_rational()), &Bound::Finite(mid.to_rational()))?;
        debug_assert!(in_left <= count);
        stack.push((lo, mid.clone(), in_left));
        stack.push((mid, hi, count - in_left));
    }
    out.sort_by(|a, b| a.lower.cmp(&b.lower));
    debug_assert!(out.windows(2).all(|w| w[0].strictly_left_of(&w[1])));
    Ok(out)
}

/// Turn a half-open node (lo, hi] holding exactly one root into its final
/// shape: a point when the root is an exact dyadic, else an open interval
/// with both endpoints certified non-roots (a root sitting exactly on `lo`
/// belongs to the neighboring node and is bisected away here).
fn normalize_single(chain: &SturmChain, lo: Dyadic, hi: Dyadic) -> Result<DyadicInterval> {
    if chain.sign_at(&hi.to_rational()) == 0 {
        return Ok(DyadicInterval::point(hi));
    }
    let mut lo = lo;
    let mut hi = hi;
    while chain.sign_at(&lo.to_rational()) == 0 {
        let mid = Dyadic::midpoint(&lo, &hi);
        let mid_rat = mid.to_rational();
        if chain.sign_at(&mid_rat) == 0 {
            return Ok(DyadicInterval::point(mid));
        }
        if chain.count_half_open(&Bound::Finite(mid_rat), &Bound::Finite(hi.to_rational()))? == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    DyadicInterval::new(lo, hi)
}

/// One bisection step on an isolating interval; points pass through.
pub(crate) fn refine_step(chain: &SturmChain, interval: &DyadicInterval) -> DyadicInterval {
    if interval.is_point() {
        return interval.clone();
    }
    let mid = interval.midpoint();
    let s_mid = chain.sign_at(&mid.to_rational());
    if s_mid == 0 {
        return DyadicInterval::point(mid);
    }
    let s_lo = chain.sign_at(&interval.lower.to_rational());
    debug_assert!(s_lo != 0);
    if s_lo != s_mid {
        DyadicInterval::new(interval.lower.clone(), mid).unwrap()
    } else {
        DyadicInterval::new(mid, interval.upper.clone()).unwrap()
    }
}

pub(crate) fn refine_with_chain(
    chain: &SturmChain,
    interval: &DyadicInterval,
    bits: u32,
) -> DyadicInterval {
    let target = Rational::new(BigInt::from(1), BigInt::from(1) << bits);
    let mut iv = interval.clone();
    while !iv.is_point() && iv.width() > target {
        iv = refine_step(chain, &iv);
    }
    iv
}

/// Bisect an isolating interval of (the squarefree part of) `p` until its
/// width is at most `2^-bits`. A root landing exactly on a dyadic midpoint
/// collapses the interval to a point.
///
/// Errors unless the interval isolates exactly one distinct root of `p`.
pub fn refine(p: &RationalPoly, interval: &DyadicInterval, bits: u32) -> Result<DyadicInterval> {
    let chain = SturmChain::new(p)?;
    if interval.is_point() {
        if chain.sign_at(&interval.lower.to_rational()) != 0 {
            return Err(Error::NotIsolating(format!(
                "point {} is not a root",
                interval.lower
            )));
        }
        return Ok(interval.clone());
    }
    let lo = interval.lower.to_rational();
    let hi = interval.upper.to_rational();
    if chain.sign_at(&lo) == 0 || chain.sign_at(&hi) == 0 {
        return Err(Error::NotIsolating(
            "interval endpoint is a root".to_string(),
        ));
    }
    let count = chain.count_half_open(&Bound::Finite(lo), &Bound::Finite(hi))?;
    if count != 1 {
        return Err(Error::NotIsolating(format!(
            "interval contains {count} distinct roots"
        )));
    }
    Ok(refine_with_chain(&chain, interval, bits))
}

/// Isolation bundled with the chain that produced it, for callers that keep
/// refining afterwards.
pub struct IsolatedRoots {
    pub chain: SturmChain,
    pub intervals: Vec<DyadicInterval>,
}

pub fn isolate_roots(p: &RationalPoly) -> Result<IsolatedRoots> {
    let chain = SturmChain::new(p)?;
    let intervals = isolate(&chain)?;
    Ok(IsolatedRoots { chain, intervals })
}

/// Full certified zero report: isolation, multiplicities via the squarefree
/// decomposition, and exact sign counts.
pub fn analyze(p: &RationalPoly) -> Result<ZeroReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let origin_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let all_simple = if degree == 0 {
        true
    } else {
        p.gcd(&p.derivative())?.is_constant()
    };
    let chain = SturmChain::new(p)?;
    let intervals = isolate(&chain)?;

    let multiplicities = if all_simple {
        vec![1usize; intervals.len()]
    } else {
        let factors = p.squarefree_decomposition()?;
        let factor_chains: Vec<(SturmChain, usize)> = factors
            .iter()
            .map(|(f, m)| Ok((SturmChain::new(f)?, *m)))
            .collect::<Result<_>>()?;
        intervals
            .iter()
            .map(|iv| multiplicity_of(iv, &factor_chains))
            .collect::<Result<Vec<_>>>()?
    };

    let mut n_negative = 0usize;
    let mut n_positive = 0usize;
    let mut n_zero_at_origin = 0usize;
    let zero = Dyadic::zero();
    let zero_rat = Rational::zero();
    for (iv, &m) in intervals.iter().zip(&multiplicities) {
        if iv.is_point() {
            match iv.lower.cmp(&zero) {
                std::cmp::Ordering::Less => n_negative += m,
                std::cmp::Ordering::Equal => n_zero_at_origin += m,
                std::cmp::Ordering::Greater => n_positive += m,
            }
            continue;
        }
        if iv.upper <= zero {
            n_negative += m;
        } else if iv.lower >= zero {
            n_positive += m;
        } else if origin_mult > 0 && chain.sign_at(&zero_rat) == 0 {
            // the unique root of this straddling interval is the origin
            n_zero_at_origin += m;
        } else if chain.sign_at(&iv.lower.to_rational()) != chain.sign_at(&zero_rat) {
            n_negative += m;
        } else {
            n_positive += m;
        }
    }

    let n_real: usize = multiplicities.iter().sum();
    debug_assert_eq!(n_zero_at_origin, origin_mult);
    debug_assert!(cross_check_sign_counts(
        &chain,
        &intervals,
        origin_mult > 0
    ));
    Ok(ZeroReport {
        degree,
        real_intervals: intervals,
        multiplicities,
        n_real,
        n_nonreal: degree - n_real,
        n_negative,
        n_positive,
        n_zero_at_origin,
        all_simple,
    })
}

fn multiplicity_of(iv: &DyadicInterval, factors: &[(SturmChain, usize)]) -> Result<usize> {
    for (chain, mult) in factors {
        let hit = if iv.is_point() {
            chain.sign_at(&iv.lower.to_rational()) == 0
        } else {
            chain.count_half_open(
                &Bound::Finite(iv.lower.to_rational()),
                &Bound::Finite(iv.upper.to_rational()),
            )? == 1
        };
        if hit {
            return Ok(*mult);
        }
    }
    Err(Error::NotIsolating(
        "no squarefree factor claims the isolated root".to_string(),
    ))
}

/// Distinct sign counts from interval classification must agree with direct
/// Sturm queries split at the origin.
fn cross_check_sign_counts(
    chain: &SturmChain,
    intervals: &[DyadicInterval],
    origin_is_root: bool,
) -> bool {
    let zero = Bound::Finite(Rational::zero());
    let left = chain.count_half_open(&Bound::NegInf, &zero).unwrap_or(0);
    let right = chain.count_half_open(&zero, &Bound::PosInf).unwrap_or(0);
    let distinct_neg = intervals
        .iter()
        .filter(|iv| {
            if iv.is_point() {
                sign_of(&iv.lower.to_rational()) < 0
            } else {
                iv.upper <= Dyadic::zero()
                    || (iv.lower < Dyadic::zero()
                        && !(origin_is_root && iv.upper > Dyadic::zero())
                        && chain.sign_at(&iv.lower.to_rational())
                            != chain.sign_at(&Rational::zero()))
            }
        })
        .count();
    left == distinct_neg + usize::from(origin_is_root)
        && right == intervals.len() - distinct_neg - usize::from(origin_is_root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn analyze_no_real_roots() {
        // x^2/2 + 3/4
        let q = RationalPoly::from_coeffs(vec![rat(3, 4), rat_int(0), rat(1, 2)]);
        let r = analyze(&q).unwrap();
        assert_eq!(r.n_real, 0);
        assert_eq!(r.n_nonreal, 2);
        assert!(r.real_intervals.is_empty());
        assert!(r.all_simple);
    }

    #[test]
    fn analyze_double_root() {
        // (x - 1)^2
        let q = p(&[1, -2, 1]);
        let r = analyze(&q).unwrap();
        assert_eq!(r.real_intervals.len(), 1);
        assert_eq!(r.multiplicities, vec![2]);
        assert_eq!(r.n_real, 2);
        assert!(!r.all_simple);
        assert_eq!(r.n_positive, 2);
    }

    #[test]
    fn analyze_origin_root() {
        // x^3/6 + 3x/4 = x (x^2/6 + 3/4)
        let q = RationalPoly::from_coeffs(vec![rat_int(0), rat(3, 4), rat_int(0), rat(1, 6)]);
        let r = analyze(&q).unwrap();
        assert_eq!(r.n_real, 1);
        assert_eq!(r.n_nonreal, 2);
        assert_eq!(r.n_zero_at_origin, 1);
        assert_eq!(r.n_negative, 0);
        assert_eq!(r.n_positive, 0);
    }

    #[test]
    fn analyze_sign_split() {
        // x(x-1)(x-2)(x+3) has roots -3, 0, 1, 2
        let q = &(&p(&[0, 1]) * &p(&[-1, 1])) * &(&p(&[-2, 1]) * &p(&[3, 1]));
        let r = analyze(&q).unwrap();
        assert_eq!(r.n_real, 4);
        assert_eq!(r.n_negative, 1);
        assert_eq!(r.n_positive, 2);
        assert_eq!(r.n_zero_at_origin, 1);
        assert!(r.all_simple);
        // intervals ordered and disjoint
        for w in r.real_intervals.windows(2) {
            assert!(w[0].strictly_left_of(&w[1]));
        }
    }

    #[test]
    fn every_interval_isolates_exactly_one_root() {
        let q = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[-4, 1]);
        let iso = isolate_roots(&q).unwrap();
        assert_eq!(iso.intervals.len(), 3);
        for iv in &iso.intervals {
            if iv.is_point() {
                assert_eq!(iso.chain.sign_at(&iv.lower.to_rational()), 0);
            } else {
                let c = iso
                    .chain
                    .count_half_open(
                        &Bound::Finite(iv.lower.to_rational()),
                        &Bound::Finite(iv.upper.to_rational()),
                    )
                    .unwrap();
                assert_eq!(c, 1);
            }
        }
    }

    #[test]
    fn refine_shrinks_to_requested_width() {
        // H_2 = 4x^2 - 2, positive root 1/sqrt(2)
        let h2 = p(&[-2, 0, 4]);
        let iv = DyadicInterval::new(Dyadic::zero(), Dyadic::from_integer(1)).unwrap();
        let out = refine(&h2, &iv, 20).unwrap();
        assert!(out.width() <= rat(1, 1 << 20));
        let lo = out.lower.to_f64();
        let hi = out.upper.to_f64();
        let root = std::f64::consts::FRAC_1_SQRT_2;
        assert!(lo <= root && root <= hi);
    }

    #[test]
    fn refine_exact_dyadic_root_degenerates() {
        // x - 1/2
        let q = RationalPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)]);
        let iv = DyadicInterval::new(Dyadic::zero(), Dyadic::from_integer(1)).unwrap();
        let out = refine(&q, &iv, 10).unwrap();
        assert!(out.is_point());
        assert_eq!(out.lower.to_rational(), rat(1, 2));
    }

    #[test]
    fn refine_rejects_non_isolating_intervals() {
        let q = p(&[0, -1, 0, 1]); // roots -1, 0, 1
        let iv = DyadicInterval::new(Dyadic::from_integer(-2), Dyadic::from_integer(2)).unwrap();
        assert!(matches!(refine(&q, &iv, 10), Err(Error::NotIsolating(_))));
    }

    #[test]
    fn refinement_width_halves_monotonically() {
        let h2 = p(&[-2, 0, 4]);
        let chain = SturmChain::new(&h2).unwrap();
        let mut iv = DyadicInterval::new(Dyadic::zero(), Dyadic::from_integer(1)).unwrap();
        let mut width = iv.width();
        for _ in 0..12 {
            iv = refine_step(&chain, &iv);
            if iv.is_point() {
                break;
            }
            let w = iv.width();
            assert!(w <= width.clone() / rat_int(2) + rat(0, 1));
            width = w;
        }
    }

    #[test]
    fn appell_style_coefficients_get_tight_bounds() {
        // tiny leading coefficient: Cauchy alone would be astronomically wide
        let q = RationalPoly::from_coeffs(vec![
            rat_int(-1),
            rat_int(0),
            rat(1, 1_000_000_000),
        ]);
        let b = root_bound(&q);
        // roots at +- sqrt(1e9) ~ 31623; bound must cover them but stay sane
        assert!(b.to_f64() >= 31623.0);
        assert!(b.to_f64() <= 1.0e7);
    }
}
