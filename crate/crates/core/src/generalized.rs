//! Generalized Hermite polynomials driven by two parameter sequences, their
//! symmetric-function expansion, sequence surgery (removal, perturbation),
//! and multiple Hermite polynomials built by the same raising step.
//!
//! The family is defined by `h_0 = 1` and
//! `h_{n+1} = (2x h_n - h_n') + (phi_{n+1} + x psi_{n+1}) h_n`.
//! Stored parameter prefixes continue with zeros, so `phi = psi = 0`
//! reproduces the classical `H_n` exactly.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hermite::hermite;
use crate::poly::RationalPoly;
use crate::rational::{
    format_rational_list, parse_rational, parse_rational_list, rat_int, Rational,
};

/// Finite prefixes of the parameter sequences; entries beyond the prefix
/// are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    phi: Vec<Rational>,
    psi: Vec<Rational>,
}

impl SequencePair {
    pub fn new(phi: Vec<Rational>, psi: Vec<Rational>) -> Result<Self> {
        if phi.len() != psi.len() {
            return Err(Error::InvalidSpec(format!(
                "phi and psi prefixes must have equal length ({} vs {})",
                phi.len(),
                psi.len()
            )));
        }
        Ok(SequencePair { phi, psi })
    }

    /// `psi = 0` throughout.
    pub fn from_phi(phi: Vec<Rational>) -> Self {
        let psi = vec![Rational::zero(); phi.len()];
        SequencePair { phi, psi }
    }

    /// Constant sequences `phi_i = r`, `psi_i = s` of the given length.
    pub fn constant(r: &Rational, s: &Rational, len: usize) -> Self {
        SequencePair {
            phi: vec![r.clone(); len],
            psi: vec![s.clone(); len],
        }
    }

    pub fn from_strs(phi: &[&str], psi: &[&str]) -> Result<Self> {
        Self::new(
            phi.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
            psi.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    pub fn phi(&self) -> &[Rational] {
        &self.phi
    }

    pub fn psi(&self) -> &[Rational] {
        &self.psi
    }

    /// 1-based access with zero continuation.
    pub fn phi_at(&self, i: usize) -> Rational {
        assert!(i >= 1, "parameter indices are 1-based");
        self.phi.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn psi_at(&self, i: usize) -> Rational {
        assert!(i >= 1, "parameter indices are 1-based");
        self.psi.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }
}

#[derive(Serialize, Deserialize)]
struct SequencePairWire {
    phi: Vec<String>,
    psi: Vec<String>,
}

impl Serialize for SequencePair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SequencePairWire {
            phi: format_rational_list(&self.phi),
            psi: format_rational_list(&self.psi),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SequencePair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SequencePairWire::deserialize(deserializer)?;
        let phi = parse_rational_list(&wire.phi).map_err(serde::de::Error::custom)?;
        let psi = parse_rational_list(&wire.psi).map_err(serde::de::Error::custom)?;
        SequencePair::new(phi, psi).map_err(serde::de::Error::custom)
    }
}

/// `h_n` for the parameter pair, by iterating the defining recurrence.
///
/// When no `psi_i = -2` occurs, the result has degree `n` and leading
/// coefficient `prod_{i<=n} (psi_i + 2)`.
pub fn gen_hermite(seq: &SequencePair, n: usize) -> RationalPoly {
    let mut h = RationalPoly::one();
    for i in 1..=n {
        let linear = RationalPoly::from_coeffs(vec![seq.phi_at(i), seq.psi_at(i)]);
        h = &h.backward_shift() + &(&linear * &h);
    }
    h
}

/// Closed form for constant sequences `phi_i = r`, `psi_i = s`:
/// `((s+2)/2)^(n/2) H_n(sqrt((s+2)/2) (x + r/(s+2)))`.
///
/// `H_n` only has terms of the parity of `n`, so the half-integer powers of
/// `(s+2)/2` always pair up to integer powers and the expansion stays
/// rational for every rational `s != -2`; no square root is ever taken.
pub fn closed_form_rs(r: &Rational, s: &Rational, n: usize) -> Result<RationalPoly> {
    let shifted = s + rat_int(2);
    if shifted.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let sigma = &shifted / rat_int(2);
    let b = r / &shifted;
    let h = hermite(n);
    let shift_poly = RationalPoly::from_coeffs(vec![b, Rational::one()]);
    let mut acc = RationalPoly::zero();
    let mut power = RationalPoly::one(); // (x + b)^k
    for k in 0..=n {
        let c = h.coeff(k);
        if !c.is_zero() {
            debug_assert!((n + k) % 2 == 0, "Hermite parity");
            let factor = c * sigma.pow(((n + k) / 2) as i32);
            acc = &acc + &power.scale(&factor);
        }
        if k < n {
            power = &power * &shift_poly;
        }
    }
    Ok(acc)
}

/// Elementary symmetric function of the first `n` entries of `phi`
/// (zero-continued), i.e. the sum of all `i`-fold products.
pub fn elementary_symmetric(phi: &[Rational], i: usize, n: usize) -> Result<Rational> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!(
            "elementary symmetric index {i} exceeds {n}"
        )));
    }
    let mut table = vec![Rational::zero(); i + 1];
    table[0] = Rational::one();
    for value in phi.iter().take(n) {
        if value.is_zero() {
            continue;
        }
        for k in (1..=i).rev() {
            let add = value * &table[k - 1];
            table[k] += add;
        }
    }
    Ok(table.pop().unwrap())
}

/// The `psi = 0` polynomial `h_n` built directly from its Hermite expansion
/// `sum_j Phi_{n-j}^n H_j`, an independent route from the recurrence.
/// Manifestly symmetric in `phi_1..phi_n`.
pub fn gen_hermite_expansion(phi: &[Rational], n: usize) -> RationalPoly {
    let mut acc = RationalPoly::zero();
    for j in 0..=n {
        let coeff = elementary_symmetric(phi, n - j, n).expect("index in range");
        if !coeff.is_zero() {
            acc = &acc + &hermite(j).scale(&coeff);
        }
    }
    acc
}

/// Remove the 1-based entry `l` from both parameter prefixes. Removing an
/// entry beyond the stored prefix removes one of the implicit zeros, which
/// leaves the sequence unchanged.
pub fn remove_term(seq: &SequencePair, l: usize) -> SequencePair {
    assert!(l >= 1, "removal index is 1-based");
    let drop_at = |v: &[Rational]| -> Vec<Rational> {
        if l > v.len() {
            return v.to_vec();
        }
        let mut out = v.to_vec();
        out.remove(l - 1);
        out
    };
    SequencePair {
        phi: drop_at(&seq.phi),
        psi: drop_at(&seq.psi),
    }
}

/// Add `m` to the 1-based entry `l` of `phi`, extending the prefix with
/// zeros if needed.
pub fn perturb_term(phi: &[Rational], l: usize, m: &Rational) -> Vec<Rational> {
    assert!(l >= 1, "perturbation index is 1-based");
    let mut out = phi.to_vec();
    if out.len() < l {
        out.resize(l, Rational::zero());
    }
    out[l - 1] += m;
    out
}

/// Multi-index and parameter tuple for multiple Hermite polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndexSpec {
    n_vec: Vec<usize>,
    c_vec: Vec<Rational>,
}

impl MultiIndexSpec {
    pub fn new(n_vec: Vec<usize>, c_vec: Vec<Rational>) -> Result<Self> {
        if n_vec.len() != c_vec.len() {
            return Err(Error::InvalidSpec(format!(
                "multi-index and parameters must have equal length ({} vs {})",
                n_vec.len(),
                c_vec.len()
            )));
        }
        for (i, a) in c_vec.iter().enumerate() {
            for b in c_vec.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::RepeatedParameters);
                }
            }
        }
        Ok(MultiIndexSpec { n_vec, c_vec })
    }

    pub fn n_vec(&self) -> &[usize] {
        &self.n_vec
    }

    pub fn c_vec(&self) -> &[Rational] {
        &self.c_vec
    }

    /// `|n| = sum n_j`.
    pub fn total(&self) -> usize {
        self.n_vec.iter().sum()
    }

    /// The parameter sequence that identifies the multiple Hermite
    /// polynomial inside the generalized family: `-c_k` repeated `n_k`
    /// times, in index order.
    pub fn merged_phi(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.total());
        for (nk, ck) in self.n_vec.iter().zip(&self.c_vec) {
            for _ in 0..*nk {
                out.push(-ck);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct MultiIndexWire {
    n: Vec<usize>,
    c: Vec<String>,
}

impl Serialize for MultiIndexSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MultiIndexWire {
            n: self.n_vec.clone(),
            c: format_rational_list(&self.c_vec),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiIndexSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = MultiIndexWire::deserialize(deserializer)?;
        let c = parse_rational_list(&wire.c).map_err(serde::de::Error::custom)?;
        MultiIndexSpec::new(wire.n, c).map_err(serde::de::Error::custom)
    }
}

/// Type II multiple Hermite polynomial for distinct parameters, built by
/// applying the raising step `H -> 2x H - H' - c_k H` once per unit of the
/// multi-index, in lexicographic order. The result is independent of the
/// step order and equals the generalized polynomial of [`MultiIndexSpec::merged_phi`].
pub fn multiple_hermite(spec: &MultiIndexSpec) -> RationalPoly {
    let mut h = RationalPoly::one();
    for (nk, ck) in spec.n_vec().iter().zip(spec.c_vec()) {
        for _ in 0..*nk {
            h = &h.backward_shift() - &h.scale(ck);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_i64_coeffs(coeffs)
    }

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn zero_parameters_reproduce_hermite() {
        let seq = SequencePair::from_phi(vec![]);
        for n in 0..=10 {
            assert_eq!(gen_hermite(&seq, n), hermite(n));
        }
    }

    #[test]
    fn small_cases_by_hand() {
        // phi = (1,1), psi = 0, n = 2: 4x^2 + 4x - 1
        let seq = SequencePair::from_phi(rats(&[1, 1]));
        assert_eq!(gen_hermite(&seq, 2), p(&[-1, 4, 4]));
        // one step from h_0 = 1: (2 + psi_1) x + phi_1
        let seq2 = SequencePair::new(vec![rat(3, 2)], vec![rat(1, 2)]).unwrap();
        assert_eq!(
            gen_hermite(&seq2, 1),
            RationalPoly::from_coeffs(vec![rat(3, 2), rat(5, 2)])
        );
    }

    #[test]
    fn leading_coefficient_product_formula() {
        let seq = SequencePair::new(
            vec![rat(1, 3), rat_int(-2), rat(5, 7)],
            vec![rat(1, 2), rat_int(3), rat(-1, 3)],
        )
        .unwrap();
        for n in 0..=3usize {
            let h = gen_hermite(&seq, n);
            assert_eq!(h.degree(), Some(n));
            let mut expect = Rational::one();
            for i in 1..=n {
                expect *= seq.psi_at(i) + rat_int(2);
            }
            assert_eq!(h.leading().unwrap(), &expect);
        }
    }

    #[test]
    fn closed_form_matches_recurrence() {
        // r = 0, s = 0 reduces to H_n
        assert_eq!(
            closed_form_rs(&Rational::zero(), &Rational::zero(), 4).unwrap(),
            hermite(4)
        );
        // r = 1, s = 0, n = 1: 2x + 1
        assert_eq!(
            closed_form_rs(&Rational::one(), &Rational::zero(), 1).unwrap(),
            p(&[1, 2])
        );
        // r = 0, s = 6, n = 2: both routes give 64x^2 - 8
        let direct = closed_form_rs(&Rational::zero(), &rat_int(6), 2).unwrap();
        let via_recurrence = gen_hermite(&SequencePair::constant(&Rational::zero(), &rat_int(6), 2), 2);
        assert_eq!(direct, p(&[-8, 0, 64]));
        assert_eq!(direct, via_recurrence);
        assert!(matches!(
            closed_form_rs(&Rational::one(), &rat_int(-2), 3),
            Err(Error::DegenerateLeadingCoefficient)
        ));
    }

    #[test]
    fn closed_form_matches_recurrence_various_parameters() {
        for (r, s) in [
            (rat(1, 2), rat_int(1)),
            (rat_int(-1), rat(3, 5)),
            (rat(2, 3), rat_int(-1)),
            (rat_int(0), rat(7, 2)),
        ] {
            for n in 0..=6 {
                let seq = SequencePair::constant(&r, &s, n);
                assert_eq!(
                    closed_form_rs(&r, &s, n).unwrap(),
                    gen_hermite(&seq, n),
                    "r={r} s={s} n={n}"
                );
            }
        }
    }

    #[test]
    fn elementary_symmetric_of_1_2_3() {
        let phi = rats(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(&phi, 0, 3).unwrap(), rat_int(1));
        assert_eq!(elementary_symmetric(&phi, 1, 3).unwrap(), rat_int(6));
        assert_eq!(elementary_symmetric(&phi, 2, 3).unwrap(), rat_int(11));
        assert_eq!(elementary_symmetric(&phi, 3, 3).unwrap(), rat_int(6));
        assert!(elementary_symmetric(&phi, 4, 3).is_err());
        // prod (x + phi_i) = sum Phi_{n-j} x^j
        let expanded = &(&p(&[1, 1]) * &p(&[2, 1])) * &p(&[3, 1]);
        for j in 0..=3 {
            assert_eq!(
                expanded.coeff(j),
                elementary_symmetric(&phi, 3 - j, 3).unwrap()
            );
        }
    }

    #[test]
    fn expansion_route_matches_recurrence_route() {
        let phi = rats(&[1, 1]);
        assert_eq!(gen_hermite_expansion(&phi, 2), p(&[-1, 4, 4]));
        assert_eq!(gen_hermite_expansion(&[], 5), hermite(5));
        // symmetry under permutation
        assert_eq!(
            gen_hermite_expansion(&rats(&[1, 2]), 2),
            gen_hermite_expansion(&rats(&[2, 1]), 2)
        );
    }

    #[test]
    fn removal_and_perturbation_surgery() {
        let seq = SequencePair::from_phi(rats(&[7, 8, 9]));
        let removed = remove_term(&seq, 2);
        assert_eq!(removed.phi(), &rats(&[7, 9])[..]);
        let seq1 = SequencePair::from_phi(rats(&[5]));
        assert!(remove_term(&seq1, 1).is_empty());
        // removing an implicit zero changes nothing
        assert_eq!(remove_term(&seq, 9), seq);

        assert_eq!(perturb_term(&rats(&[1, 2]), 1, &rat_int(3)), rats(&[4, 2]));
        assert_eq!(perturb_term(&rats(&[1, 2]), 2, &Rational::zero()), rats(&[1, 2]));
        assert_eq!(perturb_term(&rats(&[1]), 3, &rat_int(5)), rats(&[1, 0, 5]));
    }

    #[test]
    fn removal_identity_explicit_case() {
        // h_{n+1}^phi = (backward shift + phi_l) h_n^{phi with l removed}
        let seq = SequencePair::from_phi(rats(&[1, 2, 3]));
        let reduced = remove_term(&seq, 2);
        let lhs = gen_hermite(&seq, 3);
        let hn = gen_hermite(&reduced, 2);
        let rhs = &hn.backward_shift() + &hn.scale(&seq.phi_at(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn perturbation_split_identity_explicit_case() {
        // h_n^{phi+M e_l} = h_n^phi + M h_{n-1}^{phi with l removed}
        let phi = rats(&[1, 2]);
        let l = 1;
        let m = rat(1, 2);
        let n = 2;
        let lhs = gen_hermite_expansion(&perturb_term(&phi, l, &m), n);
        let reduced = remove_term(&SequencePair::from_phi(phi.clone()), l);
        let rhs = &gen_hermite_expansion(&phi, n)
            + &gen_hermite_expansion(reduced.phi(), n - 1).scale(&m);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiple_hermite_base_cases() {
        let one = MultiIndexSpec::new(vec![1], vec![rat(5, 3)]).unwrap();
        // single step: 2x - c
        assert_eq!(
            multiple_hermite(&one),
            RationalPoly::from_coeffs(vec![rat(-5, 3), rat_int(2)])
        );
        let empty = MultiIndexSpec::new(vec![0, 0], vec![rat_int(1), rat_int(2)]).unwrap();
        assert_eq!(multiple_hermite(&empty), RationalPoly::one());
        assert!(matches!(
            MultiIndexSpec::new(vec![1, 1], vec![rat_int(1), rat_int(1)]),
            Err(Error::RepeatedParameters)
        ));
    }

    #[test]
    fn multiple_hermite_equals_generalized() {
        // n = (1,1), c = (1,-1): H_2 - 1 = 4x^2 - 3
        let spec = MultiIndexSpec::new(vec![1, 1], vec![rat_int(1), rat_int(-1)]).unwrap();
        let direct = multiple_hermite(&spec);
        assert_eq!(direct, p(&[-3, 0, 4]));
        assert_eq!(direct, gen_hermite_expansion(&spec.merged_phi(), 2));
    }

    #[test]
    fn multiple_hermite_path_independence() {
        let a = MultiIndexSpec::new(vec![2, 3], vec![rat_int(1), rat(-1, 2)]).unwrap();
        let b = MultiIndexSpec::new(vec![3, 2], vec![rat(-1, 2), rat_int(1)]).unwrap();
        assert_eq!(multiple_hermite(&a), multiple_hermite(&b));
    }

    #[test]
    fn wire_formats() {
        let seq: SequencePair = serde_json::from_str(r#"{"phi": ["1", "2"], "psi": ["0", "1/2"]}"#)
            .unwrap();
        assert_eq!(seq.phi_at(2), rat_int(2));
        assert_eq!(seq.psi_at(2), rat(1, 2));
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            r#"{"phi":["1","2"],"psi":["0","1/2"]}"#
        );
        let spec: MultiIndexSpec =
            serde_json::from_str(r#"{"n": [1, 2], "c": ["1", "-1/2"]}"#).unwrap();
        assert_eq!(spec.total(), 3);
        assert_eq!(
            serde_json::to_string(&spec).unwrap(),
            r#"{"n":[1,2],"c":["1","-1/2"]}"#
        );
        // mismatched lengths and repeated parameters rejected on the wire
        assert!(serde_json::from_str::<SequencePair>(r#"{"phi": ["1"], "psi": []}"#).is_err());
        assert!(
            serde_json::from_str::<MultiIndexSpec>(r#"{"n": [1, 1], "c": ["1", "1"]}"#).is_err()
        );
    }

    proptest! {
        #[test]
        fn expansion_equals_recurrence(phi_n in prop::collection::vec(-6i64..7, 0..7),
                                       phi_d in 1i64..4) {
            let phi: Vec<Rational> = phi_n.iter().map(|&v| rat(v, phi_d)).collect();
            let n = phi.len();
            let via_expansion = gen_hermite_expansion(&phi, n);
            let via_recurrence = gen_hermite(&SequencePair::from_phi(phi), n);
            prop_assert_eq!(via_expansion, via_recurrence);
        }

        #[test]
        fn symmetric_in_parameters(phi_n in prop::collection::vec(-6i64..7, 2..6),
                                   swap_a in 0usize..6, swap_b in 0usize..6) {
            let phi: Vec<Rational> = phi_n.iter().map(|&v| rat_int(v)).collect();
            let mut permuted = phi.clone();
            let (a, b) = (swap_a % phi.len(), swap_b % phi.len());
            permuted.swap(a, b);
            let n = phi.len();
            prop_assert_eq!(gen_hermite_expansion(&phi, n), gen_hermite_expansion(&permuted, n));
        }

        #[test]
        fn removal_identity(phi_n in prop::collection::vec(-5i64..6, 1..6),
                            l in 1usize..7) {
            // valid for removal indices up to the constructed degree
            let seq = SequencePair::from_phi(phi_n.iter().map(|&v| rat_int(v)).collect());
            let n = seq.len();
            prop_assume!(l <= n);
            let reduced = remove_term(&seq, l);
            let lhs = gen_hermite(&seq, n);
            let hn = gen_hermite(&reduced, n - 1);
            let rhs = &hn.backward_shift() + &hn.scale(&seq.phi_at(l));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn perturbation_identity(phi_n in prop::collection::vec(-5i64..6, 1..6),
                                 l in 1usize..6, mn in -6i64..7, md in 1i64..4) {
            let phi: Vec<Rational> = phi_n.iter().map(|&v| rat_int(v)).collect();
            let n = phi.len();
            prop_assume!(l <= n);
            let m = rat(mn, md);
            let lhs = gen_hermite_expansion(&perturb_term(&phi, l, &m), n);
            let reduced = remove_term(&SequencePair::from_phi(phi.clone()), l);
            let rhs = &gen_hermite_expansion(&phi, n)
                + &gen_hermite_expansion(reduced.phi(), n - 1).scale(&m);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
