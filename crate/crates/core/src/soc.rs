//! Exceptionality, fully-faithfulness and semi-orthogonality checks on the
//! fibre `G(2, d)`, plus enumeration and counting of the resulting sequence.
//!
//! Every check decomposes the relevant bundle into irreducible `Σ^{a,b}Q^∨`
//! and runs Borel–Weil–Bott on each summand. Nothing here reproduces a case
//! analysis by hand; a summand either has cohomology or it does not.
//!
//! A failing report only records which group survived. The vanishing criteria
//! are sufficient conditions, so a failure is not a proof that a functor is
//! not fully faithful or that two blocks are not semi-orthogonal.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bwb::{bwb_single, cohomology, BundleExpr, BwbOutcome, GradedCohomology};
use crate::error::{Error, Result};
use crate::normal_bundle::wedge_nprime;
use crate::partitions::{compare, partitions_in_box, Weight};
use crate::rep_ring::RepElement;

const FIBRE_K: usize = 2;

/// Minimum `d` for the fully faithful and semi-orthogonal statements.
pub const MIN_D_FF: usize = 5;
/// Minimum `d` for Kapranov's collection on `G(2, d)`.
pub const MIN_D_EXC: usize = 3;

/// Kernel partition `α` of a functor, inscribed in a `2 × (d-2)` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctorLabel {
    pub alpha: Weight,
    pub d: usize,
}

impl FunctorLabel {
    pub fn new(alpha: Weight, d: usize) -> Result<Self> {
        validate_label(&alpha, d)?;
        Ok(FunctorLabel { alpha, d })
    }

    /// `λ_α = α_1 - α_2`.
    pub fn lambda(&self) -> i64 {
        lambda(&self.alpha)
    }
}

impl fmt::Display for FunctorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha)
    }
}

fn lambda(alpha: &Weight) -> i64 {
    alpha.entries()[0] - alpha.entries()[1]
}

fn validate_pair_shape(alpha: &Weight) -> Result<()> {
    if alpha.rank() != FIBRE_K || !alpha.is_partition() {
        return Err(Error::InvalidLabel {
            alpha: alpha.entries().to_vec(),
            d: 0,
        });
    }
    Ok(())
}

fn validate_label(alpha: &Weight, d: usize) -> Result<()> {
    let ok = alpha.rank() == FIBRE_K
        && alpha.is_partition()
        && d >= 2
        && alpha.first() <= d as i64 - 2;
    if !ok {
        return Err(Error::InvalidLabel {
            alpha: alpha.entries().to_vec(),
            d,
        });
    }
    Ok(())
}

/// `Σ^α Q^∨ ⊗ (Σ^β Q^∨)^∨ = ⊕_{γ=0}^{min(λ_α, λ_β)} Σ^{α_1-β_2-γ, α_2-β_1+γ} Q^∨`,
/// asserted equal to the product computed in the representation ring.
pub fn ext_decomposition(alpha: &Weight, beta: &Weight) -> Result<RepElement> {
    validate_pair_shape(alpha)?;
    validate_pair_shape(beta)?;
    let (a, b) = (alpha.entries(), beta.entries());
    let mut closed = RepElement::zero(FIBRE_K);
    for g in 0..=lambda(alpha).min(lambda(beta)) {
        closed.add_term(Weight::new(vec![a[0] - b[1] - g, a[1] - b[0] + g])?, 1);
    }
    let product = RepElement::irreducible(alpha.clone())
        .tensor(&RepElement::irreducible(beta.dual()))?;
    if product != closed {
        return Err(Error::RouteMismatch(format!(
            "Ext({beta}, {alpha}): closed form {closed}, product {product}"
        )));
    }
    Ok(closed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One irreducible summand `Σ^weight Q^∨` of `Λ^q N′ ⊗ Ext` and its cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub q: usize,
    pub weight: Weight,
    pub outcome: BwbOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub d: usize,
    pub alpha: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Weight>,
    pub conditions: Vec<Condition>,
    pub hom_dimension: i64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    /// Conditions with a non-zero cohomology group.
    pub fn surviving(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.outcome.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: d={} alpha={}", self.verdict, self.d, self.alpha)?;
        if let Some(beta) = &self.beta {
            write!(f, " beta={beta}")?;
        }
        write!(f, " hom_dimension={}", self.hom_dimension)?;
        for c in &self.conditions {
            write!(f, "\n  q={} Σ^{}Q^∨: {}", c.q, c.weight, c.outcome)?;
        }
        Ok(())
    }
}

fn fibre_outcome(d: usize, weight: &Weight) -> Result<BwbOutcome> {
    bwb_single(d, FIBRE_K, &Weight::zero(d - FIBRE_K), weight)
}

fn fibre_cohomology(d: usize, e: &RepElement) -> Result<GradedCohomology> {
    cohomology(&BundleExpr::from_q_dual(d, e)?)
}

/// Records every summand of `Λ^q N′ ⊗ ext` for `q` in `qs`. Returns the
/// conditions and whether every `q > 0` summand vanished.
fn twisted_conditions(
    d: usize,
    ext: &RepElement,
    qs: std::ops::RangeInclusive<usize>,
) -> Result<(Vec<Condition>, bool)> {
    let mut conditions = Vec::new();
    let mut higher_vanish = true;
    for q in qs {
        let twisted = wedge_nprime(q)?.tensor(ext)?;
        // highest weights first, matching the display order of the ring
        for (weight, _) in twisted.iter().collect::<Vec<_>>().into_iter().rev() {
            let outcome = fibre_outcome(d, weight)?;
            if q > 0 && !outcome.is_zero() {
                higher_vanish = false;
            }
            conditions.push(Condition {
                q,
                weight: weight.clone(),
                outcome,
            });
        }
    }
    Ok((conditions, higher_vanish))
}

fn is_one_dimensional_hom(h: &GradedCohomology) -> bool {
    h.groups().len() == 1 && h.dim(0) == 1
}

/// `Σ^α Q^∨` is exceptional on `G(2, d)`: `Ext^•(Σ^α, Σ^α) = k` in degree 0.
pub fn check_exceptional(alpha: &Weight, d: usize) -> Result<VerificationReport> {
    if d < MIN_D_EXC {
        return Err(Error::DimensionTooSmall(d, MIN_D_EXC));
    }
    validate_label(alpha, d)?;
    let ext = ext_decomposition(alpha, alpha)?;
    let h = fibre_cohomology(d, &ext)?;
    let (conditions, _) = twisted_conditions(d, &ext, 0..=0)?;
    Ok(VerificationReport {
        verdict: Verdict::from_bool(is_one_dimensional_hom(&h)),
        d,
        alpha: alpha.clone(),
        beta: None,
        conditions,
        hom_dimension: h.dim(0),
    })
}

/// `Ext^•(Σ^β Q^∨, Σ^α Q^∨) = 0` in all degrees for `α ≺ β`.
pub fn check_exceptional_pair(alpha: &Weight, beta: &Weight, d: usize) -> Result<VerificationReport> {
    if d < MIN_D_EXC {
        return Err(Error::DimensionTooSmall(d, MIN_D_EXC));
    }
    validate_label(alpha, d)?;
    validate_label(beta, d)?;
    require_ordered(alpha, beta)?;
    let ext = ext_decomposition(alpha, beta)?;
    let h = fibre_cohomology(d, &ext)?;
    let (conditions, _) = twisted_conditions(d, &ext, 0..=0)?;
    Ok(VerificationReport {
        verdict: Verdict::from_bool(h.is_zero()),
        d,
        alpha: alpha.clone(),
        beta: Some(beta.clone()),
        conditions,
        hom_dimension: h.dim(0),
    })
}

fn require_ordered(alpha: &Weight, beta: &Weight) -> Result<()> {
    if compare(alpha, beta) != Ordering::Less {
        return Err(Error::NotOrdered {
            alpha: alpha.entries().to_vec(),
            beta: beta.entries().to_vec(),
        });
    }
    Ok(())
}

/// Fibrewise criterion for the functor with kernel `Σ^α Q^∨` to be fully
/// faithful: `Hom = k` on the fibre, and
/// `H^•(G, Λ^q N′ ⊗ Σ^α Q ⊗ Σ^α Q^∨) = 0` for `q = 1..4`.
pub fn check_fully_faithful(alpha: &Weight, d: usize) -> Result<VerificationReport> {
    if d < MIN_D_FF {
        return Err(Error::DimensionTooSmall(d, MIN_D_FF));
    }
    validate_label(alpha, d)?;
    let ext = ext_decomposition(alpha, alpha)?;
    let h = fibre_cohomology(d, &ext)?;
    let (conditions, higher_vanish) = twisted_conditions(d, &ext, 0..=4)?;
    Ok(VerificationReport {
        verdict: Verdict::from_bool(is_one_dimensional_hom(&h) && higher_vanish),
        d,
        alpha: alpha.clone(),
        beta: None,
        conditions,
        hom_dimension: h.dim(0),
    })
}

/// Fibrewise criterion for `Hom(Φ_β(-), Φ_α(-)) = 0` with `α ≺ β`: every
/// `Λ^q N′ ⊗ Σ^α Q^∨ ⊗ (Σ^β Q^∨)^∨`, `q = 0..4`, has no cohomology.
pub fn check_semiorthogonal(alpha: &Weight, beta: &Weight, d: usize) -> Result<VerificationReport> {
    if d < MIN_D_FF {
        return Err(Error::DimensionTooSmall(d, MIN_D_FF));
    }
    validate_label(alpha, d)?;
    validate_label(beta, d)?;
    require_ordered(alpha, beta)?;
    let ext = ext_decomposition(alpha, beta)?;
    let (conditions, _) = twisted_conditions(d, &ext, 0..=4)?;
    let all_zero = conditions.iter().all(|c| c.outcome.is_zero());
    let hom_dimension = fibre_cohomology(d, &ext)?.dim(0);
    Ok(VerificationReport {
        verdict: Verdict::from_bool(all_zero),
        d,
        alpha: alpha.clone(),
        beta: Some(beta.clone()),
        conditions,
        hom_dimension,
    })
}

/// All labels `α ⊆ 2 × (d-2)` with `λ_α ≤ d - 5`, in `≺` order.
pub fn enumerate_ff(d: usize) -> Result<Vec<FunctorLabel>> {
    if d < MIN_D_FF {
        return Err(Error::DimensionTooSmall(d, MIN_D_FF));
    }
    Ok(partitions_in_box(FIBRE_K, d - 2)
        .into_iter()
        .filter(|a| lambda(a) <= d as i64 - 5)
        .map(|alpha| FunctorLabel { alpha, d })
        .collect())
}

/// [`enumerate_ff`] restricted to `α_2 ≥ 3`: the semi-orthogonal sequence.
pub fn enumerate_sos(d: usize) -> Result<Vec<FunctorLabel>> {
    Ok(enumerate_ff(d)?
        .into_iter()
        .filter(|l| l.alpha.entries()[1] >= 3)
        .collect())
}

/// Length of the exceptional sequence on the generalized Kummer variety:
/// `binom(d-3, 2) · 3^{2d}`.
pub fn kummer_count(d: usize) -> Result<BigUint> {
    if d < MIN_D_FF {
        return Err(Error::DimensionTooSmall(d, MIN_D_FF));
    }
    let blocks = BigUint::from(((d - 3) * (d - 4) / 2) as u64);
    Ok(blocks * BigUint::from(3u32).pow(2 * d as u32))
}

/// `Ext^•(Ω_G, Ω_G)` on `G(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentReport {
    pub verdict: Verdict,
    pub d: usize,
    pub k: usize,
    pub cohomology: GradedCohomology,
}

impl CotangentReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let groups: Vec<serde_json::Value> = self
            .cohomology
            .groups()
            .iter()
            .map(|(p, g)| serde_json::json!({"degree": p, "dim": g.dim(), "rep": g}))
            .collect();
        serde_json::json!({
            "verdict": self.verdict,
            "d": self.d,
            "k": self.k,
            "cohomology": groups,
        })
    }
}

impl fmt::Display for CotangentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: Ext(Ω, Ω) on G({},{})\n{}", self.verdict, self.k, self.d, self.cohomology)
    }
}

/// `Ext^•(Ω_G, Ω_G) = H^•(G, Ω ⊗ Ω^∨)`. For `2 ≤ k ≤ d-2` this must be
/// trivial in degree 0 and `Σ^{(1,0,…,0,-1)} V^∨` in degree 1; in every case
/// `End(Ω_G)` is one-dimensional.
pub fn check_cotangent_simple(k: usize, d: usize) -> Result<CotangentReport> {
    let omega = BundleExpr::cotangent(d, k)?;
    let ends = omega.tensor(&omega.dual())?;
    let h = cohomology(&ends)?;
    let ok = if k >= 2 && k + 2 <= d {
        h.groups().len() == 2
            && h.degree(0) == RepElement::trivial(d)
            && h.degree(1) == RepElement::irreducible(Weight::adjoint(d))
    } else {
        h.dim(0) == 1
    };
    Ok(CotangentReport {
        verdict: Verdict::from_bool(ok),
        d,
        k,
        cohomology: h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn binom(n: usize, r: usize) -> usize {
        if r > n {
            return 0;
        }
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn ext_self_is_symmetric_sum() {
        for alpha in partitions_in_box(2, 6) {
            let ext = ext_decomposition(&alpha, &alpha).unwrap();
            let expected = RepElement::from_terms(
                2,
                (0..=lambda(&alpha)).map(|k| (w(&[k, -k]), 1)),
            )
            .unwrap();
            assert_eq!(ext, expected);
        }
        assert_eq!(
            ext_decomposition(&w(&[0, 0]), &w(&[0, 0])).unwrap(),
            RepElement::trivial(2)
        );
    }

    #[test]
    fn ext_mixed_pair() {
        let ext = ext_decomposition(&w(&[2, 1]), &w(&[1, 0])).unwrap();
        let expected = RepElement::from_terms(2, [(w(&[2, 0]), 1), (w(&[1, 1]), 1)]).unwrap();
        assert_eq!(ext, expected);
    }

    #[test]
    fn ext_rejects_bad_shapes() {
        assert!(ext_decomposition(&w(&[1, 0, 0]), &w(&[0, 0])).is_err());
        assert!(ext_decomposition(&w(&[1, -1]), &w(&[0, 0])).is_err());
    }

    #[test]
    fn exceptional_examples() {
        assert!(check_exceptional(&w(&[3, 3]), 5).unwrap().passed());
        let triv = check_exceptional(&w(&[0, 0]), 3).unwrap();
        assert!(triv.passed());
        assert_eq!(triv.hom_dimension, 1);
        for d in 3..9 {
            let r = check_exceptional(&w(&[d as i64 - 2, 0]), d).unwrap();
            assert!(r.passed(), "{r}");
            // only the k = 0 summand survives
            assert_eq!(r.surviving().count(), 1);
        }
        assert!(check_exceptional(&w(&[4, 0]), 5).is_err());
    }

    #[test]
    fn fully_faithful_examples() {
        assert!(check_fully_faithful(&w(&[3, 3]), 5).unwrap().passed());
        assert!(check_fully_faithful(&w(&[4, 2]), 7).unwrap().passed());
        assert_eq!(
            check_fully_faithful(&w(&[0, 0]), 4),
            Err(Error::DimensionTooSmall(4, 5))
        );
    }

    #[test]
    fn fully_faithful_failure_trace() {
        // λ_α = 1 > d - 5: Σ^{4,-2} (q = 2) and Σ^{4,-1} (q = 3) have H^3
        let r = check_fully_faithful(&w(&[1, 0]), 5).unwrap();
        let surviving: Vec<(usize, Weight, Option<usize>)> = r
            .surviving()
            .filter(|c| c.q > 0)
            .map(|c| (c.q, c.weight.clone(), c.outcome.degree()))
            .collect();
        assert_eq!(
            surviving,
            vec![(2, w(&[4, -2]), Some(3)), (3, w(&[4, -1]), Some(3))],
            "{r}"
        );
        assert_eq!(r.hom_dimension, 1);
        assert!(!r.passed());
    }

    #[test]
    fn semiorthogonal_examples() {
        assert!(check_semiorthogonal(&w(&[4, 3]), &w(&[3, 3]), 6).unwrap().passed());
        assert!(check_semiorthogonal(&w(&[5, 4]), &w(&[4, 3]), 8).unwrap().passed());
        assert!(matches!(
            check_semiorthogonal(&w(&[3, 3]), &w(&[3, 3]), 5),
            Err(Error::NotOrdered { .. })
        ));
        assert!(matches!(
            check_semiorthogonal(&w(&[3, 3]), &w(&[4, 3]), 6),
            Err(Error::NotOrdered { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let ff5: Vec<Weight> = enumerate_ff(5).unwrap().into_iter().map(|l| l.alpha).collect();
        assert_eq!(ff5, vec![w(&[3, 3]), w(&[2, 2]), w(&[1, 1]), w(&[0, 0])]);
        assert_eq!(enumerate_ff(6).unwrap().len(), 9);
        assert_eq!(enumerate_ff(12).unwrap().len(), binom(9, 2) + 24);
        let sos5: Vec<Weight> = enumerate_sos(5).unwrap().into_iter().map(|l| l.alpha).collect();
        assert_eq!(sos5, vec![w(&[3, 3])]);
        let sos6: Vec<Weight> = enumerate_sos(6).unwrap().into_iter().map(|l| l.alpha).collect();
        assert_eq!(sos6, vec![w(&[4, 4]), w(&[4, 3]), w(&[3, 3])]);
        assert_eq!(enumerate_sos(9).unwrap().len(), 15);
        assert!(enumerate_ff(4).is_err());
    }

    #[test]
    fn enumeration_counts_match_closed_forms() {
        for d in 5..=12usize {
            let ff = enumerate_ff(d).unwrap().len();
            assert_eq!(ff, binom(d - 3, 2) + 3 * (d - 4));
            assert_eq!(ff, (d * d - d - 12) / 2);
            assert_eq!(ff, (0..=d - 5).map(|l| d - 1 - l).sum::<usize>());
            let sos = enumerate_sos(d).unwrap().len();
            assert_eq!(sos, binom(d - 3, 2));
            assert_eq!(sos, (0..=d - 5).map(|l| d - 4 - l).sum::<usize>());
        }
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_count(5).unwrap(), BigUint::from(59049u32));
        assert_eq!(kummer_count(6).unwrap(), BigUint::from(1594323u32));
        for d in 5..=12 {
            let three = BigUint::from(3u32).pow(2 * d as u32);
            assert_eq!(
                kummer_count(d).unwrap() / &three,
                BigUint::from(enumerate_sos(d).unwrap().len())
            );
        }
        assert!(kummer_count(4).is_err());
    }

    #[test]
    fn cotangent_examples() {
        let r = check_cotangent_simple(2, 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.cohomology.dims(), BTreeMap::from([(0, 1), (1, 24)]));
        let p1 = check_cotangent_simple(1, 2).unwrap();
        assert!(p1.passed());
        assert_eq!(p1.cohomology.dim(0), 1);
        let r = check_cotangent_simple(3, 7).unwrap();
        assert_eq!(r.cohomology.dim(1), 48);
        assert!(check_cotangent_simple(0, 4).is_err());
        assert!(check_cotangent_simple(4, 4).is_err());
    }

    #[test]
    fn report_json_schema() {
        let r = check_semiorthogonal(&w(&[4, 3]), &w(&[3, 3]), 6).unwrap();
        let json = r.to_json();
        assert_eq!(json["verdict"], "pass");
        assert_eq!(json["d"], 6);
        assert_eq!(json["alpha"], serde_json::json!([4, 3]));
        assert_eq!(json["beta"], serde_json::json!([3, 3]));
        let first = &json["conditions"][0];
        assert_eq!(first["q"], 0);
        assert_eq!(first["outcome"]["kind"], "zero");
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back.verdict, r.verdict);
        assert_eq!(back.conditions.len(), r.conditions.len());

        let ff = check_fully_faithful(&w(&[0, 0]), 5).unwrap().to_json();
        assert!(ff.get("beta").is_none());
        assert_eq!(ff["conditions"][0]["outcome"]["kind"], "nonzero");
        assert_eq!(ff["conditions"][0]["outcome"]["degree"], 0);
        assert_eq!(ff["conditions"][0]["outcome"]["dim"], 1);
    }
}
