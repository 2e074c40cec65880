//! Borel–Weil–Bott on the Grassmannian `G(k, d)` of `k`-dimensional quotients
//! of `V = k^d`, with tautological sequence `0 → K → V ⊗ O → Q → 0`.
//!
//! A homogeneous bundle `Σ^γ K ⊗ Σ^δ Q^∨` (γ of rank `d-k`, δ of rank `k`)
//! corresponds to the `GL_d` weight `α = (-γ ∥ δ)`, where `-γ` is the dual
//! weight `(-γ_{d-k}, ..., -γ_1)`. Add `ρ = (d, ..., 1)`; a repeated entry
//! kills all cohomology, otherwise sorting takes `ℓ` inversions and the only
//! non-zero group is `H^ℓ = Σ^β V^∨` with `β = sort(α + ρ) - ρ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Weight, WeylVector};
use crate::rep_ring::{weyl_dim, RepElement};

/// Cohomology of a single irreducible homogeneous bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BwbOutcome {
    /// All cohomology vanishes; `repeated` is a value occurring twice in `α + ρ`.
    Zero { repeated: i64 },
    /// Concentrated in `degree`, where it equals `Σ^weight V^∨`.
    Cohomology { degree: usize, weight: Weight },
}

impl BwbOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, BwbOutcome::Zero { .. })
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbOutcome::Zero { .. } => None,
            BwbOutcome::Cohomology { degree, .. } => Some(*degree),
        }
    }

    pub fn dim(&self) -> u64 {
        match self {
            BwbOutcome::Zero { .. } => 0,
            BwbOutcome::Cohomology { weight, .. } => weyl_dim(weight),
        }
    }
}

impl fmt::Display for BwbOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BwbOutcome::Zero { repeated } => write!(f, "Zero (repeat at value {repeated})"),
            BwbOutcome::Cohomology { degree, weight } => write!(
                f,
                "H^{degree} = Σ^{weight} V^∨ (dim {})",
                weyl_dim(weight)
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct OutcomeRepr {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<u64>,
}

impl Serialize for BwbOutcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            BwbOutcome::Zero { .. } => OutcomeRepr {
                kind: "zero".into(),
                degree: None,
                beta: None,
                dim: None,
            },
            BwbOutcome::Cohomology { degree, weight } => OutcomeRepr {
                kind: "nonzero".into(),
                degree: Some(*degree),
                beta: Some(weight.clone()),
                dim: Some(weyl_dim(weight)),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BwbOutcome {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = OutcomeRepr::deserialize(d)?;
        match repr.kind.as_str() {
            // the repeated value is diagnostic only and not part of the schema
            "zero" => Ok(BwbOutcome::Zero { repeated: 0 }),
            "nonzero" => Ok(BwbOutcome::Cohomology {
                degree: repr.degree.ok_or_else(|| D::Error::missing_field("degree"))?,
                weight: repr.beta.ok_or_else(|| D::Error::missing_field("beta"))?,
            }),
            other => Err(D::Error::unknown_variant(other, &["zero", "nonzero"])),
        }
    }
}

/// Runs the algorithm on a raw `GL_d` weight `α ∈ Z^d` (any order).
pub fn bwb_weight(alpha: &[i64]) -> BwbOutcome {
    let rho = WeylVector::new(alpha.len());
    let shifted: Vec<i64> = alpha.iter().zip(rho.entries()).map(|(a, r)| a + r).collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(pair) = sorted.windows(2).find(|p| p[0] == p[1]) {
        return BwbOutcome::Zero { repeated: pair[0] };
    }
    let n = shifted.len();
    let degree = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let beta = sorted.iter().zip(rho.entries()).map(|(s, r)| s - r).collect();
    BwbOutcome::Cohomology {
        degree,
        weight: Weight::new(beta).expect("sorted weights are dominant"),
    }
}

fn check_grassmannian(d: usize, k: usize) -> Result<()> {
    if k == 0 || k >= d {
        return Err(Error::InvalidGrassmannian { k, d });
    }
    Ok(())
}

/// The `GL_d` weight of `Σ^γ K ⊗ Σ^δ Q^∨`.
pub fn line_weight(d: usize, k: usize, gamma: &Weight, delta: &Weight) -> Result<Vec<i64>> {
    check_grassmannian(d, k)?;
    if gamma.rank() != d - k {
        return Err(Error::RankMismatch {
            left: d - k,
            right: gamma.rank(),
        });
    }
    if delta.rank() != k {
        return Err(Error::RankMismatch {
            left: k,
            right: delta.rank(),
        });
    }
    Ok(gamma.dual().concat(delta))
}

/// Cohomology of `Σ^γ K ⊗ Σ^δ Q^∨` on `G(k, d)`.
pub fn bwb_single(d: usize, k: usize, gamma: &Weight, delta: &Weight) -> Result<BwbOutcome> {
    Ok(bwb_weight(&line_weight(d, k, gamma, delta)?))
}

/// An integer combination of bundles `Σ^γ K ⊗ Σ^δ Q^∨` on `G(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleExpr {
    d: usize,
    k: usize,
    terms: BTreeMap<(Weight, Weight), i64>,
}

impl BundleExpr {
    pub fn zero(d: usize, k: usize) -> Result<Self> {
        check_grassmannian(d, k)?;
        Ok(BundleExpr {
            d,
            k,
            terms: BTreeMap::new(),
        })
    }

    pub fn structure_sheaf(d: usize, k: usize) -> Result<Self> {
        check_grassmannian(d, k)?;
        Self::single(d, k, Weight::zero(d - k), Weight::zero(k))
    }

    pub fn single(d: usize, k: usize, gamma: Weight, delta: Weight) -> Result<Self> {
        let mut e = Self::zero(d, k)?;
        e.add_term(gamma, delta, 1)?;
        Ok(e)
    }

    /// `K_part ⊗ Q^∨_part` for elements of the representation rings of the
    /// two tautological bundles.
    pub fn from_parts(d: usize, k: usize, k_part: &RepElement, q_part: &RepElement) -> Result<Self> {
        let mut e = Self::zero(d, k)?;
        for (g, cg) in k_part.iter() {
            for (q, cq) in q_part.iter() {
                e.add_term(g.clone(), q.clone(), cg * cq)?;
            }
        }
        Ok(e)
    }

    /// A bundle built from `Q^∨` alone, the case of every fibrewise
    /// computation on `G(2, d)`.
    pub fn from_q_dual(d: usize, q_part: &RepElement) -> Result<Self> {
        let k = q_part.rank();
        check_grassmannian(d, k)?;
        Self::from_parts(d, k, &RepElement::trivial(d - k), q_part)
    }

    /// `Ω_G = K ⊗ Q^∨`.
    pub fn cotangent(d: usize, k: usize) -> Result<Self> {
        check_grassmannian(d, k)?;
        Self::single(d, k, Weight::sym(d - k, 1), Weight::sym(k, 1))
    }

    /// `ω_G = (det K)^k ⊗ (det Q^∨)^{d-k}`.
    pub fn canonical(d: usize, k: usize) -> Result<Self> {
        check_grassmannian(d, k)?;
        Self::single(
            d,
            k,
            Weight::det_power(d - k, k as i64),
            Weight::det_power(k, (d - k) as i64),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &Weight, i64)> + '_ {
        self.terms.iter().map(|((g, q), &c)| (g, q, c))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn add_term(&mut self, gamma: Weight, delta: Weight, coeff: i64) -> Result<()> {
        line_weight(self.d, self.k, &gamma, &delta)?;
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry((gamma, delta)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    fn same_space(&self, other: &BundleExpr) -> Result<()> {
        if (self.d, self.k) != (other.d, other.k) {
            return Err(Error::RankMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(())
    }

    pub fn tensor(&self, other: &BundleExpr) -> Result<BundleExpr> {
        self.same_space(other)?;
        let mut out = BundleExpr::zero(self.d, self.k)?;
        for (g1, q1, c1) in self.iter() {
            for (g2, q2, c2) in other.iter() {
                let gs = RepElement::irreducible(g1.clone())
                    .tensor(&RepElement::irreducible(g2.clone()))?;
                let qs = RepElement::irreducible(q1.clone())
                    .tensor(&RepElement::irreducible(q2.clone()))?;
                for (g, cg) in gs.iter() {
                    for (q, cq) in qs.iter() {
                        out.add_term(g.clone(), q.clone(), c1 * c2 * cg * cq)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn dual(&self) -> BundleExpr {
        BundleExpr {
            d: self.d,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|((g, q), &c)| ((g.dual(), q.dual()), c))
                .collect(),
        }
    }

    pub fn rank(&self) -> i64 {
        self.iter()
            .map(|(g, q, c)| c * (weyl_dim(g) * weyl_dim(q)) as i64)
            .sum()
    }

    /// Alternating sum `Σ (-1)^p dim H^p`, valid for virtual bundles too.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let mut chi = 0;
        for (g, q, c) in self.iter() {
            if let BwbOutcome::Cohomology { degree, weight } = bwb_single(self.d, self.k, g, q)? {
                let sign = if degree % 2 == 0 { 1 } else { -1 };
                chi += sign * c * weyl_dim(&weight) as i64;
            }
        }
        Ok(chi)
    }
}

/// `H^•(G, E)` as `GL_d`-representations `Σ^• V^∨`, by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCohomology {
    d: usize,
    groups: BTreeMap<usize, RepElement>,
}

impl GradedCohomology {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Non-zero degrees only.
    pub fn groups(&self) -> &BTreeMap<usize, RepElement> {
        &self.groups
    }

    pub fn degree(&self, p: usize) -> RepElement {
        self.groups
            .get(&p)
            .cloned()
            .unwrap_or_else(|| RepElement::zero(self.d))
    }

    pub fn dim(&self, p: usize) -> i64 {
        self.groups.get(&p).map_or(0, RepElement::dim)
    }

    pub fn dims(&self) -> BTreeMap<usize, i64> {
        self.groups.iter().map(|(&p, g)| (p, g.dim())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&p, g)| if p % 2 == 0 { g.dim() } else { -g.dim() })
            .sum()
    }
}

impl fmt::Display for GradedCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0 (all degrees vanish)");
        }
        for (i, (p, g)) in self.groups.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "H^{p}: {g} (dim {})", g.dim())?;
        }
        Ok(())
    }
}

/// Cohomology of an effective bundle, term by term.
pub fn cohomology(e: &BundleExpr) -> Result<GradedCohomology> {
    if !e.is_effective() {
        return Err(Error::NotEffective);
    }
    let mut groups: BTreeMap<usize, RepElement> = BTreeMap::new();
    for (g, q, c) in e.iter() {
        if let BwbOutcome::Cohomology { degree, weight } = bwb_single(e.d, e.k, g, q)? {
            groups
                .entry(degree)
                .or_insert_with(|| RepElement::zero(e.d))
                .add_term(weight, c);
        }
    }
    groups.retain(|_, g| !g.is_zero());
    Ok(GradedCohomology { d: e.d, groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn binom(n: i64, r: i64) -> i64 {
        if r < 0 || r > n {
            return 0;
        }
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn repeat_kills_cohomology() {
        let out = bwb_single(5, 2, &Weight::zero(3), &w(&[1, 0])).unwrap();
        assert_eq!(out, BwbOutcome::Zero { repeated: 3 });
        assert_eq!(out.to_string(), "Zero (repeat at value 3)");
    }

    #[test]
    fn structure_sheaf_has_only_h0() {
        for d in 2..8 {
            for k in 1..d {
                let out = bwb_single(d, k, &Weight::zero(d - k), &Weight::zero(k)).unwrap();
                assert_eq!(
                    out,
                    BwbOutcome::Cohomology {
                        degree: 0,
                        weight: Weight::zero(d)
                    }
                );
            }
        }
    }

    #[test]
    fn adjoint_pair_in_degree_one() {
        for d in 4..9 {
            for k in 2..=d - 2 {
                let out =
                    bwb_single(d, k, &Weight::adjoint(d - k), &Weight::adjoint(k)).unwrap();
                assert_eq!(
                    out,
                    BwbOutcome::Cohomology {
                        degree: 1,
                        weight: Weight::adjoint(d)
                    }
                );
            }
        }
    }

    #[test]
    fn projective_line_minus_two() {
        // Σ^2 Q^∨ = O(-2) on P^1
        let out = bwb_single(2, 1, &Weight::zero(1), &w(&[2])).unwrap();
        assert_eq!(
            out,
            BwbOutcome::Cohomology {
                degree: 1,
                weight: w(&[1, 1])
            }
        );
        assert_eq!(out.dim(), 1);
    }

    #[test]
    fn vanishing_window_on_g2d() {
        for d in 3..10 {
            for a in 1..=(d as i64 - 2) {
                let e = BundleExpr::from_q_dual(d, &RepElement::irreducible(w(&[a, -a]))).unwrap();
                assert!(cohomology(&e).unwrap().is_zero(), "d={d} a={a}");
            }
        }
    }

    #[test]
    fn cotangent_has_one_class_in_h1() {
        for d in 2..8 {
            for k in 1..d {
                let h = cohomology(&BundleExpr::cotangent(d, k).unwrap()).unwrap();
                assert_eq!(h.dims(), BTreeMap::from([(1, 1)]), "G({k},{d})");
                assert_eq!(h.degree(1), RepElement::trivial(d));
            }
        }
    }

    #[test]
    fn tautological_sections() {
        // H^0(Q) = V, H^•(K) = 0, H^0(K^∨) = V^∨, H^•(Q^∨) = 0
        for d in 3..7 {
            for k in 1..d {
                let q = bwb_single(d, k, &Weight::zero(d - k), &Weight::sym(k, 1).dual()).unwrap();
                assert_eq!(q.degree(), Some(0));
                assert_eq!(q.dim(), d as u64);
                let kk = bwb_single(d, k, &Weight::sym(d - k, 1), &Weight::zero(k)).unwrap();
                assert!(kk.is_zero());
                let kd =
                    bwb_single(d, k, &Weight::sym(d - k, 1).dual(), &Weight::zero(k)).unwrap();
                assert_eq!(kd.dim(), d as u64);
                let qd = bwb_single(d, k, &Weight::zero(d - k), &Weight::sym(k, 1)).unwrap();
                assert!(qd.is_zero());
            }
        }
    }

    #[test]
    fn bott_formula_on_projective_space() {
        // on P^{d-1} = G(1, d), O(m) = Σ^{-m} Q^∨
        for d in 2..=6usize {
            for m in -(2 * d as i64)..=(2 * d as i64) {
                let h = cohomology(&BundleExpr::single(d, 1, Weight::zero(d - 1), w(&[-m])).unwrap())
                    .unwrap();
                let n = d as i64 - 1;
                let expected: BTreeMap<usize, i64> = if m >= 0 {
                    BTreeMap::from([(0, binom(n + m, n))])
                } else if m <= -(n + 1) {
                    BTreeMap::from([(n as usize, binom(-m - 1, n))])
                } else {
                    BTreeMap::new()
                };
                assert_eq!(h.dims(), expected, "d={d}, m={m}");
            }
        }
    }

    fn dominant_weights(rank: usize, lo: i64, hi: i64) -> Vec<Weight> {
        let mut out = vec![vec![]];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    let top = p.last().copied().unwrap_or(hi);
                    (lo..=top).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|v| Weight::new(v).unwrap()).collect()
    }

    #[test]
    fn serre_duality_single_terms() {
        for d in 3..7 {
            for k in 1..d {
                let n = k * (d - k);
                for gamma in dominant_weights(d - k, -2, 2) {
                    for delta in dominant_weights(k, -2, 2) {
                        let out = bwb_single(d, k, &gamma, &delta).unwrap();
                        // E^∨ ⊗ ω_G
                        let dual = bwb_single(
                            d,
                            k,
                            &gamma.dual().twist(k as i64),
                            &delta.dual().twist((d - k) as i64),
                        )
                        .unwrap();
                        match (out, dual) {
                            (BwbOutcome::Zero { .. }, BwbOutcome::Zero { .. }) => {}
                            (
                                BwbOutcome::Cohomology { degree: p, weight: x },
                                BwbOutcome::Cohomology { degree: q, weight: y },
                            ) => {
                                assert_eq!(p + q, n);
                                assert_eq!(x.dual(), y);
                            }
                            (x, y) => panic!("G({k},{d}) {gamma} {delta}: {x} vs {y}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_zero_iff_dominant() {
        let ps: Vec<i64> = (-2..3).collect();
        for &a in &ps {
            for &b in &ps {
                for &c in &ps {
                    let alpha = [a, b, c];
                    let dominant = a >= b && b >= c;
                    match bwb_weight(&alpha) {
                        BwbOutcome::Cohomology { degree, .. } => {
                            assert_eq!(degree == 0, dominant, "{alpha:?}")
                        }
                        BwbOutcome::Zero { .. } => assert!(!dominant),
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_agrees() {
        let mut e = BundleExpr::zero(5, 2).unwrap();
        e.add_term(Weight::zero(3), w(&[4, 0]), 2).unwrap();
        e.add_term(Weight::sym(3, 1), w(&[1, -1]), 1).unwrap();
        e.add_term(Weight::zero(3), w(&[0, -2]), 3).unwrap();
        let h = cohomology(&e).unwrap();
        assert_eq!(h.euler_characteristic(), e.euler_characteristic().unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            bwb_single(4, 0, &Weight::zero(4), &Weight::zero(1)),
            Err(Error::InvalidGrassmannian { .. })
        ));
        assert!(matches!(
            bwb_single(4, 2, &Weight::zero(3), &Weight::zero(2)),
            Err(Error::RankMismatch { .. })
        ));
        let mut e = BundleExpr::zero(4, 2).unwrap();
        e.add_term(Weight::zero(2), Weight::zero(2), -1).unwrap();
        assert_eq!(cohomology(&e), Err(Error::NotEffective));
    }

    #[test]
    fn outcome_json() {
        let z = serde_json::to_value(BwbOutcome::Zero { repeated: 3 }).unwrap();
        assert_eq!(z, serde_json::json!({"kind": "zero"}));
        let h = serde_json::to_value(bwb_single(2, 1, &Weight::zero(1), &w(&[2])).unwrap()).unwrap();
        assert_eq!(
            h,
            serde_json::json!({"kind": "nonzero", "degree": 1, "beta": [1, 1], "dim": 1})
        );
    }
}
