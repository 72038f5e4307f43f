//! Structural zero theorems as executable, certified checks: interlacing,
//! real-rootedness sweeps, non-real-count thresholds, Turan inequalities,
//! coefficient transforms, zero monotonicity, sign-count laws, and the
//! Beardon-Driver interval test.
//!
//! Everything here certifies exactly: Sturm counts decide root counts,
//! isolating intervals are refined until orderings are unambiguous, and a
//! gcd test catches coincident roots before any refinement loop could fail
//! to separate them.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dyadic::DyadicInterval;
use crate::error::{Error, Result};
use crate::generalized::{gen_hermite_expansion, SequencePair};
use crate::hermite::{combination, hermite, CombinationSpec, Normalization};
use crate::poly::RationalPoly;
use crate::rational::{factorial, format_rational, rat_int, Rational};
use crate::roots::isolate::{isolate, refine_step, refine_with_chain};
use crate::roots::{analyze, real_zero_count, Bound, SturmChain, ZeroReport};

/// Outcome of an interlacing test, with the first violated condition when it
/// fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InterlaceVerdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl InterlaceVerdict {
    fn ok() -> Self {
        InterlaceVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        InterlaceVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    U,
    V,
}

/// Does the ordered zero set `U` strictly interlace `V`?
///
/// `U` strictly interlaces `V` when `min U < min V` and between any two
/// consecutive elements of either set lies an element of the other; the
/// cardinality dichotomy `|U| = |V|` or `|U| = |V| + 1` is asserted as well.
/// An empty `V` is interlaced by any `U` with at most one element.
///
/// Both lists must be internally ordered and all intervals pairwise
/// separable (refine first); otherwise this errors.
pub fn interlaces(u: &[DyadicInterval], v: &[DyadicInterval]) -> Result<InterlaceVerdict> {
    for (name, list) in [("U", u), ("V", v)] {
        for w in list.windows(2) {
            if !w[0].strictly_left_of(&w[1]) {
                return Err(Error::InvalidInterval(format!(
                    "{name} intervals not strictly ordered"
                )));
            }
        }
    }
    for iu in u {
        for iv in v {
            if iu.overlaps(iv) {
                return Err(Error::InvalidInterval(
                    "interval lists not separated; refine before comparing".to_string(),
                ));
            }
        }
    }
    if u.len() != v.len() && u.len() != v.len() + 1 {
        return Ok(InterlaceVerdict::fail(format!(
            "count mismatch: |U| = {} vs |V| = {}",
            u.len(),
            v.len()
        )));
    }
    if v.is_empty() {
        return Ok(InterlaceVerdict::ok());
    }
    if u.is_empty() {
        return Ok(InterlaceVerdict::fail(
            "count mismatch: U empty, V nonempty".to_string(),
        ));
    }
    // merge by certified order
    let mut merged: Vec<(Label, &DyadicInterval)> = u
        .iter()
        .map(|iv| (Label::U, iv))
        .chain(v.iter().map(|iv| (Label::V, iv)))
        .collect();
    merged.sort_by(|a, b| {
        if a.1.strictly_left_of(b.1) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
    if merged[0].0 != Label::U {
        return Ok(InterlaceVerdict::fail(
            "min-ordering violated: min V < min U".to_string(),
        ));
    }
    for (i, pair) in merged.windows(2).enumerate() {
        if pair[0].0 == pair[1].0 {
            let set = if pair[0].0 == Label::U { "U" } else { "V" };
            return Ok(InterlaceVerdict::fail(format!(
                "no element of the other set between consecutive elements of {set} (positions {i} and {})",
                i + 1
            )));
        }
    }
    Ok(InterlaceVerdict::ok())
}

/// Isolate both zero sets, refine until unambiguous, and evaluate strict
/// interlacing of `zeros(p)` against `zeros(q)`.
///
/// Errors with [`Error::SharedZero`] if the polynomials have a real zero in
/// common (detected exactly by gcd), since strict interlacing is then
/// impossible and no refinement would separate the lists.
pub fn interlaces_certified(p: &RationalPoly, q: &RationalPoly) -> Result<InterlaceVerdict> {
    let g = p.gcd(q)?;
    if !g.is_constant() && SturmChain::new(&g)?.count_all() > 0 {
        return Err(Error::SharedZero);
    }
    let chain_p = SturmChain::new(p)?;
    let chain_q = SturmChain::new(q)?;
    let mut iu = isolate(&chain_p)?;
    let mut iv = isolate(&chain_q)?;
    separate_lists(&chain_p, &mut iu, &chain_q, &mut iv)?;
    interlaces(&iu, &iv)
}

/// Refine two interval lists (against their own chains) until no interval of
/// one overlaps an interval of the other. Terminates whenever the two
/// polynomials share no real root.
fn separate_lists(
    chain_u: &SturmChain,
    u: &mut [DyadicInterval],
    chain_v: &SturmChain,
    v: &mut [DyadicInterval],
) -> Result<()> {
    for _round in 0..4096 {
        let mut any_overlap = false;
        for iu in u.iter_mut() {
            for iv in v.iter_mut() {
                if iu.overlaps(iv) {
                    any_overlap = true;
                    *iu = refine_step(chain_u, iu);
                    *iv = refine_step(chain_v, iv);
                }
            }
        }
        if !any_overlap {
            return Ok(());
        }
    }
    Err(Error::NotIsolating(
        "failed to separate interval lists after refinement".to_string(),
    ))
}

/// Certified comparison of two algebraic numbers given by isolating
/// intervals over their polynomials. Handles equality exactly through the
/// gcd.
pub fn compare_algebraic(
    p: &RationalPoly,
    ip: &DyadicInterval,
    q: &RationalPoly,
    iq: &DyadicInterval,
) -> Result<Ordering> {
    let chain_p = SturmChain::new(p)?;
    let chain_q = SturmChain::new(q)?;
    let g = p.gcd(q)?;
    let g_chain = if g.is_constant() {
        None
    } else {
        Some(SturmChain::new(&g)?)
    };
    let mut a = ip.clone();
    let mut b = iq.clone();
    for _round in 0..4096 {
        if a.is_point() && b.is_point() && a.lower == b.lower {
            return Ok(Ordering::Equal);
        }
        if a.strictly_left_of(&b) {
            return Ok(Ordering::Less);
        }
        if b.strictly_left_of(&a) {
            return Ok(Ordering::Greater);
        }
        if let Some(gc) = &g_chain {
            // Equal iff both isolated roots are the single shared root in
            // the hull of the two intervals.
            let lo = if a.lower <= b.lower { &a.lower } else { &b.lower };
            let hi = if a.upper >= b.upper { &a.upper } else { &b.upper };
            let count_in = |chain: &SturmChain| -> Result<usize> {
                let mut c = chain.count_half_open(
                    &Bound::Finite(lo.to_rational()),
                    &Bound::Finite(hi.to_rational()),
                )?;
                if chain.sign_at(&lo.to_rational()) == 0 {
                    c += 1;
                }
                Ok(c)
            };
            if count_in(gc)? == 1 && count_in(&chain_p)? == 1 && count_in(&chain_q)? == 1 {
                return Ok(Ordering::Equal);
            }
        }
        a = refine_step(&chain_p, &a);
        b = refine_step(&chain_q, &b);
    }
    Err(Error::NotIsolating(
        "could not order algebraic numbers".to_string(),
    ))
}

/// One entry of a standard-normalization sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StandardSweepEntry {
    pub report: ZeroReport,
    pub interlace_vs_previous: Option<InterlaceVerdict>,
}

/// Result of sweeping standard combinations over a range of `n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StandardSweep {
    /// Whether the coefficient polynomial `P` is real-rooted.
    pub p_real_rooted: bool,
    /// First `n` in the range at which `q_n` was real-rooted and simple.
    pub onset: Option<usize>,
    /// All expectations satisfied over the range.
    pub holds: bool,
    pub witness: Option<String>,
    pub per_n: BTreeMap<usize, StandardSweepEntry>,
}

fn note_failure(msg: String, witness: &mut Option<String>, holds: &mut bool) {
    if witness.is_none() {
        *witness = Some(msg);
    }
    *holds = false;
}

/// Sweep `q_n` (standard normalization) over `n_range`, certifying real-
/// rootedness, simplicity and consecutive interlacing.
///
/// When `P` is real-rooted all of that must hold from `n = K` on; otherwise
/// the sweep reports the first `n` where real-rootedness appears and demands
/// that it persist (with interlacing) through the rest of the range.
pub fn verify_real_rooted_standard(
    spec: &CombinationSpec,
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<StandardSweep> {
    let k = spec.order();
    let (start, end) = (*n_range.start(), *n_range.end());
    if start < k {
        return Err(Error::IndexUnderflow { n: start, k });
    }
    let p_real_rooted = real_zero_count(&spec.coefficient_poly())? == k;
    let mut onset = None;
    let mut holds = true;
    let mut witness = None;
    let mut per_n = BTreeMap::new();
    let mut previous: Option<RationalPoly> = None;
    for n in start..=end {
        let qn = combination(spec, Normalization::Standard, n)?;
        let report = analyze(&qn)?;
        let real_simple = report.n_real == n && report.all_simple;
        if real_simple && onset.is_none() {
            onset = Some(n);
        }
        if p_real_rooted && !real_simple {
            note_failure(
                format!("q_{n} expected real-rooted and simple (P real-rooted)"),
                &mut witness,
                &mut holds,
            );
        }
        if !p_real_rooted && onset.is_some_and(|o| n > o) && !real_simple {
            note_failure(
                format!("real-rootedness did not persist at n = {n}"),
                &mut witness,
                &mut holds,
            );
        }
        let expect_structure = p_real_rooted || onset.is_some_and(|o| n > o);
        let interlace = match (&previous, expect_structure && real_simple && n > start) {
            (Some(prev), true) => {
                let verdict = interlaces_certified(&qn, prev)?;
                if !verdict.holds {
                    note_failure(
                        format!(
                            "zeros of q_{n} fail to interlace zeros of q_{}: {}",
                            n - 1,
                            verdict.witness.clone().unwrap_or_default()
                        ),
                        &mut witness,
                        &mut holds,
                    );
                }
                Some(verdict)
            }
            _ => None,
        };
        per_n.insert(
            n,
            StandardSweepEntry {
                report,
                interlace_vs_previous: interlace,
            },
        );
        previous = Some(qn);
    }
    if !p_real_rooted && onset.is_none() {
        note_failure(
            "no real-rooted q_n found in range".to_string(),
            &mut witness,
            &mut holds,
        );
    }
    Ok(StandardSweep {
        p_real_rooted,
        onset,
        holds,
        witness,
        per_n,
    })
}

/// The explicit real-rootedness bound
/// `max{(K-1)^2 4^(K-2) max^2{|gamma_j| : 2 <= j <= K}, 2K}` for standard
/// combinations.
pub fn explicit_onset_bound(spec: &CombinationSpec) -> Rational {
    let k = spec.order();
    if k == 0 {
        return Rational::zero();
    }
    let max_tail = spec
        .gamma()
        .iter()
        .skip(2)
        .map(|g| g.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let first = rat_int(((k as i64) - 1).pow(2))
        * rat_int(4).pow(k as i32 - 2)
        * (&max_tail * &max_tail);
    let second = rat_int(2 * k as i64);
    first.max(second)
}

/// Default ceiling for threshold and structure sweeps.
pub const DEFAULT_SWEEP_CEILING: usize = 60;

/// Real-rootedness onset bound from an exact rational factorization
/// `P = P_real * P_nr`: `tau` holds the coefficients of the non-real factor
/// `P_nr` (degree `2m`, no real zeros), `k_total` is the degree of `P`.
///
/// The onset `n0` of real-rootedness for the standard combination built
/// from `tau` alone bounds the onset for the full spec by `n0 + K - m`.
/// General real roots of a rational `P` are irrational, so this is only
/// available when the caller supplies the factorization exactly.
pub fn factored_onset_bound(
    tau: &[Rational],
    k_total: usize,
    ceiling: usize,
) -> Result<usize> {
    let tau_spec = CombinationSpec::new(tau.to_vec())?;
    let two_m = tau_spec.order();
    if two_m % 2 != 0 || k_total < two_m {
        return Err(Error::InvalidSpec(
            "non-real factor must have even degree at most deg P".to_string(),
        ));
    }
    let m = two_m / 2;
    if real_zero_count(&tau_spec.coefficient_poly())? != 0 {
        return Err(Error::InvalidSpec(
            "supplied factor has real zeros".to_string(),
        ));
    }
    let sweep = verify_real_rooted_standard(&tau_spec, two_m..=ceiling)?;
    let n0 = sweep
        .onset
        .ok_or(Error::CeilingExceeded { ceiling })?;
    Ok(n0 + k_total - m)
}

/// Result of an Appell threshold sweep: the first `n` at which `q_n` carries
/// the full non-real count of `P`, plus per-`n` certified reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub n0: usize,
    pub nonreal_count: usize,
    pub holds: bool,
    pub witness: Option<String>,
    pub per_n_reports: BTreeMap<usize, ZeroReport>,
}

/// Sweep Appell combinations upward until `q_n` has exactly
/// `N_nr = (non-real zeros of P)` non-real zeros, then certify that every
/// later `q_n` up to the ceiling keeps exactly `N_nr` non-real and
/// `n - N_nr` simple real zeros, with consecutive real-zero interlacing,
/// and that the non-real count never decreases along the sweep.
pub fn threshold_appell(spec: &CombinationSpec, n_ceiling: usize) -> Result<ThresholdResult> {
    let k = spec.order();
    let p = spec.coefficient_poly();
    let nonreal_count = k - real_zero_count(&p)?;
    let mut per_n_reports = BTreeMap::new();
    let mut n0 = None;
    let mut holds = true;
    let mut witness = None;
    let mut previous: Option<RationalPoly> = None;
    let mut last_nonreal = 0usize;
    for n in 0..=n_ceiling {
        let qn = combination(spec, Normalization::Appell, n)?;
        let report = analyze(&qn)?;
        if n > 0 && report.n_nonreal < last_nonreal {
            note_failure(
                format!(
                    "non-real count decreased from {last_nonreal} to {} at n = {n}",
                    report.n_nonreal
                ),
                &mut witness,
                &mut holds,
            );
        }
        last_nonreal = report.n_nonreal;
        if n0.is_none() && report.n_nonreal == nonreal_count {
            n0 = Some(n);
        }
        if let Some(n0v) = n0 {
            if report.n_nonreal != nonreal_count {
                note_failure(
                    format!(
                        "q_{n} has {} non-real zeros, expected exactly {nonreal_count}",
                        report.n_nonreal
                    ),
                    &mut witness,
                    &mut holds,
                );
            }
            if report.n_real != n - nonreal_count || !report.real_zeros_simple() {
                note_failure(
                    format!("q_{n} does not have {} simple real zeros", n - nonreal_count),
                    &mut witness,
                    &mut holds,
                );
            }
            if n > n0v {
                if let Some(prev) = &previous {
                    let verdict = interlaces_certified(&qn, prev)?;
                    if !verdict.holds {
                        note_failure(
                            format!(
                                "real zeros of q_{n} fail to interlace those of q_{}: {}",
                                n - 1,
                                verdict.witness.clone().unwrap_or_default()
                            ),
                            &mut witness,
                            &mut holds,
                        );
                    }
                }
            }
        }
        per_n_reports.insert(n, report);
        previous = Some(qn);
    }
    let n0 = n0.ok_or(Error::CeilingExceeded { ceiling: n_ceiling })?;
    if n0 > 0 {
        debug_assert!(per_n_reports[&(n0 - 1)].n_nonreal != nonreal_count);
    }
    Ok(ThresholdResult {
        n0,
        nonreal_count,
        holds,
        witness,
        per_n_reports,
    })
}

/// Lemma-2 coefficient transform: from `B_0..B_{K-1}` and a real `theta`,
/// produce `A_0..A_K` with `A_0 = B_0`, `A_j = B_j - theta B_{j-1}` and
/// `A_K = -theta B_{K-1}`, so that `P_A = (x - theta) P_B` exactly.
///
/// `theta = 0` is degenerate for combination specs (it makes `A_K = 0`).
pub fn lem2_transform(b: &[Rational], theta: &Rational) -> Result<Vec<Rational>> {
    if b.is_empty() {
        return Err(Error::InvalidSpec("empty coefficient list".to_string()));
    }
    if b[0].is_zero() || b.last().unwrap().is_zero() {
        return Err(Error::InvalidSpec(
            "B_0 and B_{K-1} must be nonzero".to_string(),
        ));
    }
    let len = b.len();
    let mut a = Vec::with_capacity(len + 1);
    a.push(b[0].clone());
    for j in 1..len {
        a.push(&b[j] - &(theta * &b[j - 1]));
    }
    a.push(-(theta * &b[len - 1]));
    Ok(a)
}

/// Inverse of [`lem2_transform`]: `B_j = sum_{i<=j} theta^i A_{j-i}`.
pub fn lem2_inverse(a: &[Rational], theta: &Rational) -> Vec<Rational> {
    let len = a.len().saturating_sub(1);
    let mut b = Vec::with_capacity(len);
    for j in 0..len {
        let mut acc = Rational::zero();
        let mut theta_pow = Rational::one();
        for i in 0..=j {
            acc += &theta_pow * &a[j - i];
            theta_pow *= theta;
        }
        b.push(acc);
    }
    b
}

/// Result of sweeping the pencil `q_n - theta q_{n-1}` over sampled `theta`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PencilResult {
    /// Max of the per-theta thresholds: empirical candidate for the
    /// theta-independent `n_*`.
    pub n_star: usize,
    pub nonreal_count: usize,
    pub holds: bool,
    pub witness: Option<String>,
    pub per_theta: Vec<(String, ThresholdResult)>,
}

/// Default pencil sample: a spread of magnitudes on both sides of zero
/// (zero itself would void the `gamma_K != 0` invariant).
pub fn default_pencil_samples() -> Vec<Rational> {
    vec![
        rat_int(-10),
        rat_int(-1),
        Rational::new((-1).into(), 3.into()),
        Rational::new(1.into(), 3.into()),
        rat_int(1),
        rat_int(10),
    ]
}

/// For each sampled `theta`, build the transformed spec whose Appell
/// combination is exactly `q_n - theta q_{n-1}` and find its threshold; the
/// reported `n_star` is the max over samples. Requires `P` to have non-real
/// zeros.
pub fn pencil_threshold_appell(
    spec: &CombinationSpec,
    theta_samples: &[Rational],
    n_ceiling: usize,
) -> Result<PencilResult> {
    let k = spec.order();
    let nonreal_count = k - real_zero_count(&spec.coefficient_poly())?;
    if nonreal_count == 0 {
        return Err(Error::InvalidSpec(
            "pencil threshold requires P with non-real zeros".to_string(),
        ));
    }
    let mut per_theta = Vec::new();
    let mut n_star = 0usize;
    let mut holds = true;
    let mut witness = None;
    for theta in theta_samples {
        if theta.is_zero() {
            return Err(Error::InvalidSpec(
                "theta = 0 voids gamma_K != 0; sample nonzero theta".to_string(),
            ));
        }
        let transformed = CombinationSpec::new(lem2_transform(spec.gamma(), theta)?)?;
        let result = threshold_appell(&transformed, n_ceiling)?;
        debug_assert_eq!(result.nonreal_count, nonreal_count);
        n_star = n_star.max(result.n0);
        if !result.holds {
            holds = false;
            if witness.is_none() {
                witness = result
                    .witness
                    .clone()
                    .map(|w| format!("theta = {}: {w}", format_rational(theta)));
            }
        }
        per_theta.push((format_rational(theta), result));
    }
    Ok(PencilResult {
        n_star,
        nonreal_count,
        holds,
        witness,
        per_theta,
    })
}

/// What family a Turan check runs over.
pub enum TuranInput<'a> {
    Combination {
        spec: &'a CombinationSpec,
        normalization: Normalization,
    },
    Generalized(&'a SequencePair),
}

/// Report of a Turan-inequality check on the triple `(p_{n-2}, p_{n-1}, p_n)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TuranReport {
    pub holds: bool,
    pub degree: usize,
    pub leading: String,
    /// For the generalized family: whether the theorem's hypotheses
    /// (`phi_{n-1} = phi_n`, `psi_{n-1} = psi_n`, all `psi_i > -2`) held.
    pub hypothesis_met: Option<bool>,
    #[serde(skip)]
    pub leading_value: Rational,
}

/// Form the Turan determinant `r = p_{n-1}^2 - p_n p_{n-2}` exactly and
/// certify its strict positivity on the whole real line (no real zeros, by
/// Sturm, plus a positive sample value). Degree and leading coefficient are
/// reported for comparison with the closed formulas.
///
/// Needs `n >= 2`; standard combinations additionally need `n - 2 >= K` so
/// all three members exist.
pub fn turan_check(input: &TuranInput, n: usize) -> Result<TuranReport> {
    if n < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "Turan triple needs n >= 2, got {n}"
        )));
    }
    let member = |m: usize| -> Result<RationalPoly> {
        match input {
            TuranInput::Combination {
                spec,
                normalization,
            } => combination(spec, *normalization, m),
            TuranInput::Generalized(seq) => Ok(crate::generalized::gen_hermite(seq, m)),
        }
    };
    let p_n = member(n)?;
    let p_n1 = member(n - 1)?;
    let p_n2 = member(n - 2)?;
    let r = &(&p_n1 * &p_n1) - &(&p_n * &p_n2);
    if r.is_zero() {
        return Err(Error::DegenerateTriple);
    }
    let no_real_zeros = SturmChain::new(&r)?.count_all() == 0;
    let positive_sample = r.eval(&Rational::zero()).is_positive();
    let hypothesis_met = match input {
        TuranInput::Generalized(seq) => Some(
            seq.phi_at(n - 1) == seq.phi_at(n)
                && seq.psi_at(n - 1) == seq.psi_at(n)
                && (1..=n).all(|i| seq.psi_at(i) > rat_int(-2)),
        ),
        _ => None,
    };
    let leading_value = r.leading().unwrap().clone();
    Ok(TuranReport {
        holds: no_real_zeros && positive_sample,
        degree: r.degree().unwrap(),
        leading: format_rational(&leading_value),
        hypothesis_met,
        leading_value,
    })
}

/// Predicted degree and leading coefficient of the generalized Turan
/// determinant when the hypotheses hold: degree `2n-4`, leading
/// `(psi_n + 2) prod_{j<=n-2} (psi_j + 2)^2`.
pub fn turan_generalized_leading(seq: &SequencePair, n: usize) -> (usize, Rational) {
    let mut lead = seq.psi_at(n) + rat_int(2);
    for j in 1..=n.saturating_sub(2) {
        let f = seq.psi_at(j) + rat_int(2);
        lead *= &f * &f;
    }
    (2 * n - 4, lead)
}

/// Predicted degree and leading coefficient when `psi_{n-1} = psi_n` but
/// `phi_{n-1} != phi_n`: odd degree `2n-3`, leading
/// `(phi_{n-1} - phi_n)(psi_n + 2) prod_{j<=n-2} (psi_j + 2)^2`.
pub fn turan_failure_leading(seq: &SequencePair, n: usize) -> (usize, Rational) {
    let (_, base) = turan_generalized_leading(seq, n);
    (2 * n - 3, (seq.phi_at(n - 1) - seq.phi_at(n)) * base)
}

/// Predicted degree and leading coefficient of the Appell Turan
/// determinant: degree `2n-2`, leading `1/((n-1)! n!)`.
pub fn turan_appell_leading(n: usize) -> (usize, Rational) {
    (
        2 * n - 2,
        Rational::new(1.into(), factorial(n - 1) * factorial(n)),
    )
}

/// Certify that every zero of the `psi = 0` polynomial moves weakly left
/// when the parameters grow: `phi <= rho` entrywise implies
/// `zeta_k(rho) <= zeta_k(phi)` for each `k`. Intervals are refined to
/// `2^-bits` and compared; the exact algebraic comparison resolves any
/// remaining overlap, including genuine equality.
pub fn monotonicity_probe(
    phi: &[Rational],
    rho: &[Rational],
    n: usize,
    bits: u32,
) -> Result<bool> {
    let len = phi.len().max(rho.len()).max(n);
    let at = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
    for i in 0..len {
        if at(phi, i) > at(rho, i) {
            return Err(Error::InvalidSpec(format!(
                "phi must be entrywise <= rho (violated at index {})",
                i + 1
            )));
        }
    }
    let h_phi = gen_hermite_expansion(phi, n);
    let h_rho = gen_hermite_expansion(rho, n);
    let chain_phi = SturmChain::new(&h_phi)?;
    let chain_rho = SturmChain::new(&h_rho)?;
    let iv_phi: Vec<_> = isolate(&chain_phi)?
        .into_iter()
        .map(|iv| refine_with_chain(&chain_phi, &iv, bits))
        .collect();
    let iv_rho: Vec<_> = isolate(&chain_rho)?
        .into_iter()
        .map(|iv| refine_with_chain(&chain_rho, &iv, bits))
        .collect();
    if iv_phi.len() != n || iv_rho.len() != n {
        return Err(Error::NotIsolating(
            "expected n simple real zeros on both sides".to_string(),
        ));
    }
    for k in 0..n {
        // need zeta_k(rho) <= zeta_k(phi)
        if iv_rho[k].strictly_left_of(&iv_phi[k]) {
            continue;
        }
        let ord = compare_algebraic(&h_rho, &iv_rho[k], &h_phi, &iv_phi[k])?;
        if ord == Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parity of `n - K` in the sign-count law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// One row of the sign-count comparison. For even `n - K` the prediction is
/// exact; for odd `n - K` the predicted values are lower bounds.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignCountEntry {
    pub parity: Parity,
    pub predicted_negative: usize,
    pub predicted_positive: usize,
    pub observed_negative: usize,
    pub observed_positive: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignCountReport {
    pub order: usize,
    pub p_negative: usize,
    pub p_nonreal: usize,
    /// First `n` from which agreement holds through the end of the range.
    pub onset: Option<usize>,
    pub per_n: BTreeMap<usize, SignCountEntry>,
}

/// Exact negative/positive/origin zero counts (with multiplicity) without
/// isolating intervals; much cheaper than a full analysis for sweeps.
fn signed_counts(p: &RationalPoly) -> Result<(usize, usize, usize)> {
    let origin = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let count_factor = |f: &RationalPoly| -> Result<(usize, usize)> {
        let chain = SturmChain::new(f)?;
        let zero = Bound::Finite(Rational::zero());
        let mut neg = chain.count_half_open(&Bound::NegInf, &zero)?;
        if chain.sign_at(&Rational::zero()) == 0 {
            neg -= 1;
        }
        let pos = chain.count_half_open(&zero, &Bound::PosInf)?;
        Ok((neg, pos))
    };
    if p.is_constant() {
        return Ok((0, 0, 0));
    }
    if p.is_squarefree()? {
        let (neg, pos) = count_factor(p)?;
        return Ok((neg, pos, origin));
    }
    let mut neg = 0usize;
    let mut pos = 0usize;
    for (factor, mult) in p.squarefree_decomposition()? {
        let (fneg, fpos) = count_factor(&factor)?;
        neg += mult * fneg;
        pos += mult * fpos;
    }
    Ok((neg, pos, origin))
}

/// Compare observed sign counts of Appell combinations against the
/// predicted law: for even `n - K`, exactly `(n-K)/2 + N_neg` negative and
/// `(n-K)/2 + K - N_nr - N_neg` positive zeros; for odd `n - K`, at least
/// `(n-K-1)/2 + N_neg` negative and `(n-K-1)/2 + K - N_nr - N_neg`
/// positive. Reports the first `n` from which agreement persists.
pub fn sign_counts_check(
    spec: &CombinationSpec,
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<SignCountReport> {
    let k = spec.order();
    let p = spec.coefficient_poly();
    let (p_negative, _, p_origin) = signed_counts(&p)?;
    debug_assert_eq!(p_origin, 0, "P(0) = gamma_K != 0");
    let p_nonreal = k - real_zero_count(&p)?;
    let start = (*n_range.start()).max(k);
    let end = *n_range.end();
    let mut per_n = BTreeMap::new();
    for n in start..=end {
        let qn = combination(spec, Normalization::Appell, n)?;
        let (observed_negative, observed_positive, _) = signed_counts(&qn)?;
        let m = n - k;
        let (parity, predicted_negative, predicted_positive, agrees) = if m % 2 == 0 {
            let pn = m / 2 + p_negative;
            let pp = m / 2 + k - p_nonreal - p_negative;
            (
                Parity::Even,
                pn,
                pp,
                observed_negative == pn && observed_positive == pp,
            )
        } else {
            let pn = (m - 1) / 2 + p_negative;
            let pp = (m - 1) / 2 + k - p_nonreal - p_negative;
            (
                Parity::Odd,
                pn,
                pp,
                observed_negative >= pn && observed_positive >= pp,
            )
        };
        per_n.insert(
            n,
            SignCountEntry {
                parity,
                predicted_negative,
                predicted_positive,
                observed_negative,
                observed_positive,
                agrees,
            },
        );
    }
    // first n such that every later entry agrees
    let mut onset = None;
    for (&n, entry) in per_n.iter().rev() {
        if entry.agrees {
            onset = Some(n);
        } else {
            break;
        }
    }
    Ok(SignCountReport {
        order: k,
        p_negative,
        p_nonreal,
        onset,
        per_n,
    })
}

/// Result of the Beardon-Driver interval test.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BeardonDriverReport {
    pub required: usize,
    pub hits: usize,
    pub holds: bool,
}

/// Count how many open intervals between consecutive zeros of `H_n` contain
/// a certified zero of the standard combination `q_n`; at least `n - K` of
/// them must.
///
/// For `K = 0` the combination is `H_n` itself and every zero coincides
/// with an interval endpoint; that degenerate case passes by the convention
/// that coincident zeros count as containment. The same convention applies
/// to any zero `q_n` shares with `H_n` (detected exactly by gcd).
pub fn beardon_driver_check(spec: &CombinationSpec, n: usize) -> Result<BeardonDriverReport> {
    let k = spec.order();
    if n < k {
        return Err(Error::IndexUnderflow { n, k });
    }
    let required = n - k;
    if k == 0 {
        return Ok(BeardonDriverReport {
            required,
            hits: required,
            holds: true,
        });
    }
    let h_n = hermite(n);
    let q_n = combination(spec, Normalization::Standard, n)?;
    // Strip any zeros q_n shares with H_n; they sit on interval endpoints
    // and each counts as a containment hit by convention.
    let mut reduced = q_n;
    let mut shared_hits = 0usize;
    loop {
        let g = reduced.gcd(&h_n)?;
        if g.is_constant() {
            break;
        }
        shared_hits += SturmChain::new(&g)?.count_all();
        reduced = reduced.divide_exact(&g).expect("gcd divides exactly");
    }
    let chain_h = SturmChain::new(&h_n)?;
    let mut iv_h = isolate(&chain_h)?;
    let mut hits = shared_hits;
    if !reduced.is_constant() {
        let chain_q = SturmChain::new(&reduced)?;
        let mut iv_q = isolate(&chain_q)?;
        separate_lists(&chain_h, &mut iv_h, &chain_q, &mut iv_q)?;
        for gap in iv_h.windows(2) {
            let hit = iv_q
                .iter()
                .any(|q| gap[0].strictly_left_of(q) && q.strictly_left_of(&gap[1]));
            if hit {
                hits += 1;
            }
        }
    }
    Ok(BeardonDriverReport {
        required,
        hits,
        holds: hits >= required,
    })
}

/// Obreshkov-style spot check: when `deg p = 1 + deg q` and the zeros
/// interlace, every pencil `mu p + lambda q` over a sample grid must be
/// real-rooted with simple zeros.
pub fn obreshkov_pencil_check(p: &RationalPoly, q: &RationalPoly) -> Result<bool> {
    let samples: [(i64, i64); 8] = [
        (1, 0),
        (0, 1),
        (1, 1),
        (1, -1),
        (2, 1),
        (1, -3),
        (1, 3),
        (5, -2),
    ];
    for (mu, lambda) in samples {
        let pencil = &p.scale(&rat_int(mu)) + &q.scale(&rat_int(lambda));
        if pencil.is_constant() {
            continue;
        }
        let degree = pencil.degree().unwrap();
        let simple_real =
            pencil.is_squarefree()? && SturmChain::new(&pencil)?.count_all() == degree;
        if !simple_real {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::Dyadic;
    use crate::rational::rat;
    use crate::roots::analyze;

    fn iv_point(v: i64) -> DyadicInterval {
        DyadicInterval::point(Dyadic::from_integer(v))
    }

    #[test]
    fn interlace_definition_on_points() {
        // U = {0}, V = {1}: min condition holds, betweenness vacuous
        let verdict = interlaces(&[iv_point(0)], &[iv_point(1)]).unwrap();
        assert!(verdict.holds);
        // U = {1}, V = {0}: min-ordering fails
        let verdict = interlaces(&[iv_point(1)], &[iv_point(0)]).unwrap();
        assert!(!verdict.holds);
        assert!(verdict.witness.unwrap().contains("min-ordering"));
        // cardinality dichotomy
        let verdict = interlaces(&[iv_point(0), iv_point(2), iv_point(4)], &[iv_point(1)]).unwrap();
        assert!(!verdict.holds);
        assert!(verdict.witness.unwrap().contains("count mismatch"));
        // empty V: |U| <= 1 passes
        assert!(interlaces(&[iv_point(3)], &[]).unwrap().holds);
        assert!(interlaces(&[], &[]).unwrap().holds);
        // alternation failure
        let verdict =
            interlaces(&[iv_point(0), iv_point(1)], &[iv_point(2), iv_point(3)]).unwrap();
        assert!(!verdict.holds);
        // unordered lists are a usage error
        assert!(interlaces(&[iv_point(2), iv_point(1)], &[]).is_err());
    }

    #[test]
    fn interlace_certified_on_combination() {
        // gamma = [1, -1] standard: q_2 = 2(2x+1)(x-1), q_1 = 2x - 1
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let q2 = combination(&spec, Normalization::Standard, 2).unwrap();
        let q1 = combination(&spec, Normalization::Standard, 1).unwrap();
        let verdict = interlaces_certified(&q2, &q1).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn shared_zero_is_detected() {
        let p = RationalPoly::from_i64_coeffs(&[-1, 0, 1]); // (x-1)(x+1)
        let q = RationalPoly::from_i64_coeffs(&[-1, 1]); // x - 1
        assert!(matches!(
            interlaces_certified(&p, &q),
            Err(Error::SharedZero)
        ));
    }

    #[test]
    fn compare_algebraic_orders_and_equates() {
        // sqrt(2) vs itself through different polynomials
        let p = RationalPoly::from_i64_coeffs(&[-2, 0, 1]);
        let q = &p * &RationalPoly::from_i64_coeffs(&[-5, 1]); // extra root at 5
        let ip = DyadicInterval::new(Dyadic::from_integer(1), Dyadic::from_integer(2)).unwrap();
        assert_eq!(
            compare_algebraic(&p, &ip, &q, &ip).unwrap(),
            Ordering::Equal
        );
        // sqrt(2) < 3/2 exactly
        let r = RationalPoly::from_coeffs(vec![rat(-3, 2), Rational::one()]);
        let ir = DyadicInterval::new(Dyadic::from_integer(1), Dyadic::from_integer(2)).unwrap();
        assert_eq!(
            compare_algebraic(&p, &ip, &r, &ir).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn standard_sweep_real_rooted_p() {
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let sweep = verify_real_rooted_standard(&spec, 1..=10).unwrap();
        assert!(sweep.p_real_rooted);
        assert!(sweep.holds, "{:?}", sweep.witness);
        assert_eq!(sweep.onset, Some(1));
    }

    #[test]
    fn standard_sweep_nonreal_p_finds_onset() {
        // P = x^2 + 1: explicit bound max{1, 4} = 4
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        assert_eq!(explicit_onset_bound(&spec), rat_int(4));
        let sweep = verify_real_rooted_standard(&spec, 2..=12).unwrap();
        assert!(!sweep.p_real_rooted);
        assert!(sweep.holds, "{:?}", sweep.witness);
        let onset = sweep.onset.unwrap();
        assert!(rat_int(onset as i64) <= explicit_onset_bound(&spec));
        assert_eq!(onset, 2); // q_2 = H_2 + H_0 = 4x^2 - 1
    }

    #[test]
    fn threshold_for_x2_plus_1() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let result = threshold_appell(&spec, 12).unwrap();
        assert_eq!(result.nonreal_count, 2);
        assert_eq!(result.n0, 2);
        assert!(result.holds, "{:?}", result.witness);
        assert_eq!(result.per_n_reports[&1].n_nonreal, 0);
        assert_eq!(result.per_n_reports[&2].n_nonreal, 2);
        assert_eq!(result.per_n_reports[&7].n_real, 5);
    }

    #[test]
    fn threshold_real_rooted_p_is_zero() {
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let result = threshold_appell(&spec, 10).unwrap();
        assert_eq!(result.nonreal_count, 0);
        assert_eq!(result.n0, 0);
        assert!(result.holds, "{:?}", result.witness);
    }

    #[test]
    fn ceiling_error_when_threshold_unreachable() {
        // P = x^2 + 1 needs n0 = 2; a ceiling of 1 cannot reach it
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        assert!(matches!(
            threshold_appell(&spec, 1),
            Err(Error::CeilingExceeded { ceiling: 1 })
        ));
    }

    #[test]
    fn lem2_transform_and_inverse() {
        // B = [1, 1], theta = 2: A = [1, -1, -2], P_A = (x-2)(x+1)
        let b = vec![rat_int(1), rat_int(1)];
        let a = lem2_transform(&b, &rat_int(2)).unwrap();
        assert_eq!(a, vec![rat_int(1), rat_int(-1), rat_int(-2)]);
        let pa = CombinationSpec::new(a.clone()).unwrap().coefficient_poly();
        assert_eq!(pa, RationalPoly::from_i64_coeffs(&[-2, -1, 1]));
        assert_eq!(lem2_inverse(&a, &rat_int(2)), b);
        // theta = 0 appends a zero, flagged by the spec constructor
        let a0 = lem2_transform(&b, &Rational::zero()).unwrap();
        assert!(a0.last().unwrap().is_zero());
        assert!(CombinationSpec::new(a0).is_err());
    }

    #[test]
    fn lem2_polynomial_identity() {
        let b = vec![rat_int(1), rat(-1, 2), rat_int(3)];
        let theta = rat(5, 3);
        let a = lem2_transform(&b, &theta).unwrap();
        let pb = CombinationSpec::new(b).unwrap().coefficient_poly();
        let pa_coeffs: Vec<Rational> = a.iter().rev().cloned().collect();
        let pa = RationalPoly::from_coeffs(pa_coeffs);
        let factor = RationalPoly::from_coeffs(vec![-theta, Rational::one()]);
        assert_eq!(pa, &factor * &pb);
    }

    #[test]
    fn pencil_thresholds_for_x2_plus_1() {
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let thetas = [rat_int(-1), rat_int(1), rat(1, 3)];
        let result = pencil_threshold_appell(&spec, &thetas, 12).unwrap();
        assert_eq!(result.nonreal_count, 2);
        assert!(result.holds, "{:?}", result.witness);
        assert!(result.n_star <= 6);
        // exact identity: transformed combination equals q_n - theta q_{n-1}
        for theta in &thetas {
            let a = CombinationSpec::new(lem2_transform(spec.gamma(), theta).unwrap()).unwrap();
            for n in 0..=8 {
                let lhs = combination(&a, Normalization::Appell, n).unwrap();
                let qn = combination(&spec, Normalization::Appell, n).unwrap();
                let qm = if n == 0 {
                    RationalPoly::zero()
                } else {
                    combination(&spec, Normalization::Appell, n - 1).unwrap()
                };
                assert_eq!(lhs, &qn - &qm.scale(theta));
            }
        }
        // P with only real zeros is rejected
        let real_spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        assert!(pencil_threshold_appell(&real_spec, &thetas, 10).is_err());
    }

    #[test]
    fn turan_pure_hermite_cases() {
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        // standard n = 2: H_1^2 - H_2 H_0 = 2
        let report = turan_check(
            &TuranInput::Combination {
                spec: &pure,
                normalization: Normalization::Standard,
            },
            2,
        )
        .unwrap();
        assert!(report.holds);
        assert_eq!(report.degree, 0);
        assert_eq!(report.leading_value, rat_int(2));
        // Appell n = 2: x^2/2 + 1/4 > 0, degree 2, leading 1/(1! 2!)
        let report = turan_check(
            &TuranInput::Combination {
                spec: &pure,
                normalization: Normalization::Appell,
            },
            2,
        )
        .unwrap();
        assert!(report.holds);
        let (deg, lead) = turan_appell_leading(2);
        assert_eq!(report.degree, deg);
        assert_eq!(report.leading_value, lead);
    }

    #[test]
    fn turan_generalized_hypotheses_and_failure() {
        // hypotheses hold: phi = (1, 2, 2), psi = (1/2, 1/2, 1/2)
        let seq = SequencePair::from_strs(&["1", "2", "2"], &["1/2", "1/2", "1/2"]).unwrap();
        let report = turan_check(&TuranInput::Generalized(&seq), 3).unwrap();
        assert_eq!(report.hypothesis_met, Some(true));
        assert!(report.holds);
        let (deg, lead) = turan_generalized_leading(&seq, 3);
        assert_eq!(report.degree, deg);
        assert_eq!(report.leading_value, lead);
        // psi equal, phi unequal: odd degree 2n-3, never positive
        let seq = SequencePair::from_strs(&["1", "2", "5"], &["0", "0", "0"]).unwrap();
        let report = turan_check(&TuranInput::Generalized(&seq), 3).unwrap();
        assert_eq!(report.hypothesis_met, Some(false));
        assert!(!report.holds);
        let (deg, lead) = turan_failure_leading(&seq, 3);
        assert_eq!(report.degree, deg);
        assert_eq!(report.leading_value, lead);
    }

    #[test]
    fn monotonicity_of_zeros_in_parameters() {
        // phi = (0,0) vs rho = (1,1): zeros of H_2 vs 4x^2+4x-1
        assert!(monotonicity_probe(
            &[Rational::zero(), Rational::zero()],
            &[rat_int(1), rat_int(1)],
            2,
            40
        )
        .unwrap());
        // equal parameters: trivially true (every comparison is equality)
        assert!(monotonicity_probe(&[rat_int(1)], &[rat_int(1)], 1, 40).unwrap());
        // violated precondition
        assert!(monotonicity_probe(&[rat_int(2)], &[rat_int(1)], 1, 40).is_err());
    }

    #[test]
    fn perturbation_interlacing_case() {
        // phi = (0,0), l = 1, M = 1: zeros of the perturbed polynomial
        // interlace the zeros of H_2
        let phi = vec![Rational::zero(), Rational::zero()];
        let perturbed = crate::generalized::perturb_term(&phi, 1, &rat_int(1));
        let h_pert = gen_hermite_expansion(&perturbed, 2);
        let h_base = gen_hermite_expansion(&phi, 2);
        let verdict = interlaces_certified(&h_pert, &h_base).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn sign_counts_for_real_rooted_p() {
        // gamma = [1, -1]: P = x - 1, no negative zeros
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let report = sign_counts_check(&spec, 1..=12).unwrap();
        assert_eq!(report.p_negative, 0);
        assert_eq!(report.p_nonreal, 0);
        // n = 3: n - K = 2 even, predicted (1 negative, 2 positive)
        let entry = &report.per_n[&3];
        assert_eq!(entry.parity, Parity::Even);
        assert_eq!(entry.predicted_negative, 1);
        assert_eq!(entry.predicted_positive, 2);
        assert!(entry.agrees);
        assert!(report.onset.is_some());
    }

    #[test]
    fn sign_counts_pure_hermite_symmetry() {
        let spec = CombinationSpec::from_strs(&["1"]).unwrap();
        let report = sign_counts_check(&spec, 0..=10).unwrap();
        for (n, entry) in &report.per_n {
            if n % 2 == 0 {
                assert_eq!(entry.observed_negative, n / 2);
                assert_eq!(entry.observed_positive, n / 2);
                assert!(entry.agrees);
            }
        }
    }

    #[test]
    fn beardon_driver_examples() {
        let spec = CombinationSpec::from_strs(&["1", "-1"]).unwrap();
        let report = beardon_driver_check(&spec, 5).unwrap();
        assert_eq!(report.required, 4);
        assert!(report.holds, "hits = {}", report.hits);
        let spec2 = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let report2 = beardon_driver_check(&spec2, 8).unwrap();
        assert_eq!(report2.required, 6);
        assert!(report2.holds, "hits = {}", report2.hits);
        // K = 0 convention
        let pure = CombinationSpec::from_strs(&["1"]).unwrap();
        let report3 = beardon_driver_check(&pure, 4).unwrap();
        assert!(report3.holds);
    }

    #[test]
    fn obreshkov_spot_check_on_hermite() {
        assert!(obreshkov_pencil_check(&hermite(5), &hermite(4)).unwrap());
    }

    #[test]
    fn factored_bound_dominates_empirical_onset() {
        // P = x^2 + 1 is its own non-real factor: K = 2, m = 1
        let tau = vec![rat_int(1), rat_int(0), rat_int(1)];
        let bound = factored_onset_bound(&tau, 2, 20).unwrap();
        let spec = CombinationSpec::from_strs(&["1", "0", "1"]).unwrap();
        let sweep = verify_real_rooted_standard(&spec, 2..=bound + 5).unwrap();
        assert!(sweep.onset.unwrap() <= bound);
        // P = (x - 1)(x^2 + 1): same non-real factor, K = 3
        let bound3 = factored_onset_bound(&tau, 3, 20).unwrap();
        let mixed = CombinationSpec::from_strs(&["1", "-1", "1", "-1"]).unwrap();
        let sweep3 = verify_real_rooted_standard(&mixed, 3..=bound3 + 5).unwrap();
        assert!(sweep3.onset.unwrap() <= bound3, "onset {:?} vs bound {bound3}", sweep3.onset);
        // a factor with real zeros is rejected
        assert!(factored_onset_bound(&[rat_int(1), rat_int(0), rat_int(-1)], 2, 20).is_err());
    }

    #[test]
    fn nonreal_count_monotone_under_derivative() {
        // Z_nr(q_n) nondecreasing in n for an Appell spec
        let spec = CombinationSpec::from_strs(&["1", "1/2", "2"]).unwrap();
        let mut last = 0;
        for n in 0..=15 {
            let qn = combination(&spec, Normalization::Appell, n).unwrap();
            let report = analyze(&qn).unwrap();
            assert!(report.n_nonreal >= last, "decrease at n = {n}");
            last = report.n_nonreal;
        }
    }
}
