//! Fibrewise model of the normal bundle `N′` on `G(2, d)`.
//!
//! Everything is written in the Schur basis of `Q^∨` (rank 2): `Q^∨ = Σ^{1,0}`,
//! `Q = Σ^{0,-1}`, `det Q^∨ = Σ^{1,1}`. `N′` sits in the split sequence
//! `0 → Q^∨ → Q ⊗ S²Q^∨ → N′ → 0` and equals `Σ^{2,-1}Q^∨ = S³Q^∨ ⊗ det Q`.
//! None of these expressions depend on `d`.

use crate::error::{Error, Result};
use crate::partitions::Weight;
use crate::rep_ring::{cauchy_ext_power, ext_power, RepElement};

const RANK: usize = 2;

fn q_schur(a: i64, b: i64) -> RepElement {
    RepElement::irreducible(Weight::new(vec![a, b]).expect("dominant"))
}

/// `Q^∨`.
pub fn q_dual() -> RepElement {
    q_schur(1, 0)
}

/// `Q = Σ^{0,-1} Q^∨`.
pub fn q() -> RepElement {
    q_schur(0, -1)
}

/// `N′ = Σ^{2,-1} Q^∨`.
pub fn nprime() -> RepElement {
    q_schur(2, -1)
}

/// The middle term `Q ⊗ S²Q^∨`, computed as a product.
pub fn middle() -> RepElement {
    q().tensor(&q_schur(2, 0)).expect("rank 2")
}

/// The two summands of `Q ⊗ S²Q^∨`: `(Σ^{2,-1}, Σ^{1,0})`.
pub fn middle_split() -> (RepElement, RepElement) {
    (nprime(), q_dual())
}

/// `Λ²(S²Q^∨ ⊗ Q)` through the Cauchy decomposition of a wedge of a tensor.
pub fn wedge2_middle() -> Result<RepElement> {
    cauchy_ext_power(&q_schur(2, 0), &q(), 2)
}

/// `Λ^q` of the middle term via Cauchy; an independent path from the
/// character expansion of `Λ^q N′`.
fn wedge_middle(q: usize) -> Result<RepElement> {
    cauchy_ext_power(&q_schur(2, 0), &self::q(), q)
}

/// `Λ^q N′` from the sequence: `Λ^q M = Σ_i Λ^i Q^∨ ⊗ Λ^{q-i} N′`, solved for
/// the last term recursively.
pub fn wedge_nprime_by_filtration(q: usize) -> Result<RepElement> {
    let sub_wedges = [RepElement::trivial(RANK), q_dual(), q_schur(1, 1)];
    let mut quotient_wedges: Vec<RepElement> = Vec::with_capacity(q + 1);
    for j in 0..=q {
        let mut rest = wedge_middle(j)?;
        for (i, sub) in sub_wedges.iter().enumerate().skip(1) {
            if i <= j {
                rest = rest - sub.tensor(&quotient_wedges[j - i])?;
            }
        }
        quotient_wedges.push(rest);
    }
    Ok(quotient_wedges.pop().expect("q + 1 entries"))
}

/// `Λ^q N′` for `q = 0..=4`, computed directly and through the sequence;
/// the two must agree and be effective.
pub fn wedge_nprime(q: usize) -> Result<RepElement> {
    if q > 4 {
        return Err(Error::WedgeOutOfRange(q));
    }
    let direct = ext_power(&nprime(), q)?;
    let filtered = wedge_nprime_by_filtration(q)?;
    if direct != filtered {
        return Err(Error::RouteMismatch(format!(
            "Λ^{q} N′: direct {direct}, filtration {filtered}"
        )));
    }
    if !direct.is_effective() {
        return Err(Error::RouteMismatch(format!("Λ^{q} N′ = {direct} is virtual")));
    }
    Ok(direct)
}

/// The normal-bundle data on a fibre `G(2, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBundleModel {
    pub d: usize,
    pub nprime: RepElement,
    pub sub: RepElement,
    pub middle: RepElement,
    pub quotient: RepElement,
}

impl NormalBundleModel {
    pub fn on_fibre(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::DimensionTooSmall(d, 3));
        }
        Ok(NormalBundleModel {
            d,
            nprime: nprime(),
            sub: q_dual(),
            middle: middle(),
            quotient: nprime(),
        })
    }

    /// `middle = sub + quotient` in the representation ring.
    pub fn sequence_splits(&self) -> bool {
        self.middle == self.sub.clone() + self.quotient.clone()
    }
}

/// `dim I/mI = d + (l² - l)/2` for a planar subscheme, cross-checked as
/// `(d - l) + binom(l + 1, 2)`.
pub fn planar_rank_identity(d: u64, l: u64) -> Result<u64> {
    if l < 1 || l > d {
        return Err(Error::RouteMismatch(format!("need 1 <= l <= d, got l={l}, d={d}")));
    }
    let closed = d + (l * l - l) / 2;
    let split = (d - l) + (l + 1) * l / 2;
    if closed != split {
        return Err(Error::RouteMismatch(format!("{closed} != {split}")));
    }
    Ok(closed)
}
