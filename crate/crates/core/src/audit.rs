//! Batch verification of the statements the engine is built to check.
//! Each check returns a [`CheckResult`]; the `audit` subcommand prints
//! them as a table.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bwb::{cohomology, BundleExpr};
use crate::error::Result;
use crate::normal_bundle::{wedge2_middle, wedge_nprime, wedge_nprime_by_filtration};
use crate::partitions::{partitions_in_box, partitions_of, Weight};
use crate::rep_ring::{char_of, RepElement};
use crate::soc::{
    check_cotangent_simple, check_exceptional, check_exceptional_pair, check_fully_faithful,
    check_semiorthogonal, enumerate_ff, enumerate_sos, kummer_count,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual assertions evaluated.
    pub cases: usize,
    /// First failure, if any.
    pub detail: Option<String>,
}

struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, id: u8, name: &'static str) -> CheckResult {
        CheckResult {
            id,
            name,
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure,
        }
    }
}

fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).expect("literal weights are dominant")
}

/// Upper bounds of every range, capped by `d_max`.
#[derive(Debug, Clone, Copy)]
pub struct AuditBounds {
    pub d_max: usize,
}

impl AuditBounds {
    pub fn full() -> Self {
        AuditBounds { d_max: 12 }
    }

    fn cap(&self, limit: usize) -> usize {
        limit.min(self.d_max)
    }
}

pub fn counting(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 5..=b.cap(12) {
        let ff = enumerate_ff(d)?.len() as u64;
        let sos = enumerate_sos(d)?.len() as u64;
        let du = d as u64;
        t.check(ff == binom(du - 3, 2) + 3 * (du - 4), || format!("d={d}: |ff| = {ff}"));
        t.check(sos == binom(du - 3, 2), || format!("d={d}: |sos| = {sos}"));
    }
    Ok(t.finish(1, "ff-and-sos-counts"))
}

pub fn kummer(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    if b.d_max >= 5 {
        t.check(kummer_count(5)? == BigUint::from(59049u32), || {
            "kummer_count(5) != 59049".into()
        });
    }
    for d in 5..=b.cap(12) {
        let expected = BigUint::from(binom(d as u64 - 3, 2)) * BigUint::from(3u32).pow(2 * d as u32);
        let got = kummer_count(d)?;
        t.check(got == expected, || format!("d={d}: {got} != {expected}"));
        let via_list = BigUint::from(enumerate_sos(d)?.len()) * BigUint::from(3u32).pow(2 * d as u32);
        t.check(got == via_list, || format!("d={d}: disagrees with |sos|·3^(2d)"));
    }
    Ok(t.finish(2, "kummer-count"))
}

pub fn fully_faithful(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 5..=b.cap(9) {
        for alpha in partitions_in_box(2, d - 2) {
            if alpha.first() - alpha.entries()[1] > d as i64 - 5 {
                continue;
            }
            let r = check_fully_faithful(&alpha, d)?;
            t.check(r.passed() && r.hom_dimension == 1, || r.to_string());
        }
    }
    Ok(t.finish(3, "fully-faithful"))
}

pub fn semiorthogonal(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 5..=b.cap(9) {
        let labels = partitions_in_box(2, d - 2);
        for (i, alpha) in labels.iter().enumerate() {
            for beta in &labels[i + 1..] {
                if alpha.first() - beta.entries()[1] > d as i64 - 5 {
                    continue;
                }
                let r = check_semiorthogonal(alpha, beta, d)?;
                t.check(r.passed(), || r.to_string());
            }
        }
        let sos = enumerate_sos(d)?;
        for (i, a) in sos.iter().enumerate() {
            for bl in &sos[i + 1..] {
                t.check(a.alpha.first() - bl.alpha.entries()[1] <= d as i64 - 5, || {
                    format!("d={d}: sequence pair {} {} outside the bound", a.alpha, bl.alpha)
                });
                let r = check_semiorthogonal(&a.alpha, &bl.alpha, d)?;
                t.check(r.passed(), || r.to_string());
            }
        }
    }
    Ok(t.finish(4, "semi-orthogonal"))
}

pub fn kapranov(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 3..=b.cap(8) {
        let labels = partitions_in_box(2, d - 2);
        for (i, alpha) in labels.iter().enumerate() {
            let r = check_exceptional(alpha, d)?;
            t.check(r.passed() && r.hom_dimension == 1, || r.to_string());
            for beta in &labels[i + 1..] {
                let r = check_exceptional_pair(alpha, beta, d)?;
                t.check(r.passed(), || r.to_string());
            }
        }
    }
    Ok(t.finish(5, "kapranov-exceptional"))
}

pub fn normal_bundle() -> Result<CheckResult> {
    let mut t = Tally::new();
    let irr = |v: &[i64]| RepElement::irreducible(w(v));
    let w3 = wedge_nprime(3)?;
    t.check(w3 == irr(&[3, 0]), || format!("Λ³N′ = {w3}"));
    let w4 = wedge_nprime(4)?;
    t.check(w4 == irr(&[2, 2]), || format!("Λ⁴N′ = {w4}"));
    let mid = wedge2_middle()?;
    let expected = irr(&[3, -1]).scale(2) + irr(&[1, 1]).scale(2) + irr(&[2, 0]);
    t.check(mid == expected, || format!("Λ²(S²Q^∨ ⊗ Q) = {mid}"));
    for q in 0..=4 {
        let direct = crate::rep_ring::ext_power(&crate::normal_bundle::nprime(), q)?;
        let filtered = wedge_nprime_by_filtration(q)?;
        t.check(direct == filtered, || format!("q={q}: {direct} vs {filtered}"));
    }
    Ok(t.finish(6, "normal-bundle-wedges"))
}

pub fn cotangent(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 4..=b.cap(8) {
        for k in 2..=d - 2 {
            let r = check_cotangent_simple(k, d)?;
            let dims = r.cohomology.dims();
            let ok = r.passed()
                && dims.len() == 2
                && dims.get(&0) == Some(&1)
                && dims.get(&1) == Some(&((d * d - 1) as i64));
            t.check(ok, || r.to_string());
        }
    }
    Ok(t.finish(7, "cotangent-simple"))
}

pub fn oracle(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for rank in 1..=3 {
        let parts: Vec<Weight> = (0..=6).flat_map(|n| partitions_of(n, rank)).collect();
        for a in &parts {
            let ca = char_of(&RepElement::irreducible(a.clone()));
            for bw in &parts {
                let product = RepElement::irreducible(a.clone()).tensor(&RepElement::irreducible(bw.clone()))?;
                let cb = char_of(&RepElement::irreducible(bw.clone()));
                t.check(ca.mul(&cb) == char_of(&product), || {
                    format!("rank {rank}: {a} ⊗ {bw} = {product}")
                });
            }
        }
    }
    // projective spaces P^{d-1} of dimension <= 5
    for d in 2..=b.cap(6).max(2) {
        let n = d as i64 - 1;
        for m in -12..=12i64 {
            let bundle = BundleExpr::single(d, 1, Weight::zero(d - 1), w(&[-m]))?;
            let h = cohomology(&bundle)?;
            let expected: Vec<(usize, i64)> = if m >= 0 {
                vec![(0, binom((n + m) as u64, n as u64) as i64)]
            } else if m <= -(n + 1) {
                vec![(n as usize, binom((-m - 1) as u64, n as u64) as i64)]
            } else {
                vec![]
            };
            let got: Vec<(usize, i64)> = h.dims().into_iter().collect();
            t.check(got == expected, || format!("P^{n}, O({m}): {got:?} vs {expected:?}"));
        }
    }
    Ok(t.finish(8, "oracle-equivalence"))
}

pub fn pieri() -> Result<CheckResult> {
    let mut t = Tally::new();
    let irr = |v: &[i64]| RepElement::irreducible(w(v));
    let sym = irr(&[2, 1, 0]).tensor(&irr(&[2, 0, 0]))?;
    let expected = irr(&[4, 1, 0]) + irr(&[3, 2, 0]) + irr(&[3, 1, 1]) + irr(&[2, 2, 1]);
    t.check(sym == expected, || format!("Σ^(2,1,0) ⊗ S² = {sym}"));
    let ext = irr(&[2, 1, 0]).tensor(&irr(&[1, 1, 0]))?;
    let expected = irr(&[3, 2, 0]) + irr(&[3, 1, 1]) + irr(&[2, 2, 1]);
    t.check(ext == expected, || format!("Σ^(2,1,0) ⊗ Λ² = {ext}"));
    Ok(t.finish(9, "pieri"))
}

pub fn planar_rank(b: AuditBounds) -> Result<CheckResult> {
    let mut t = Tally::new();
    for d in 1..=b.cap(12) as u64 {
        for l in 1..=d {
            let got = crate::normal_bundle::planar_rank_identity(d, l)?;
            let split = (d - l) + binom(l + 1, 2);
            t.check(got == split, || format!("d={d}, l={l}: {got} != {split}"));
        }
    }
    Ok(t.finish(10, "planar-rank-identity"))
}

/// Runs every check in order.
pub fn run_all(b: AuditBounds) -> Result<Vec<CheckResult>> {
    Ok(vec![
        counting(b)?,
        kummer(b)?,
        fully_faithful(b)?,
        semiorthogonal(b)?,
        kapranov(b)?,
        normal_bundle()?,
        cotangent(b)?,
        oracle(b)?,
        pieri()?,
        planar_rank(b)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audit_passes() {
        let results = run_all(AuditBounds { d_max: 6 }).unwrap();
        assert_eq!(results.len(), 10);
        for r in &results {
            assert!(r.passed, "{r:?}");
            assert!(r.cases > 0, "{r:?}");
        }
    }

    #[test]
    fn audit_is_deterministic() {
        let b = AuditBounds { d_max: 5 };
        assert_eq!(run_all(b).unwrap(), run_all(b).unwrap());
    }
}
