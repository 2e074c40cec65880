//! The representation ring of `GL_r` in the basis of Schur functors.
//!
//! Products go through the Littlewood–Richardson rule after shifting each
//! factor by a power of the determinant; exterior and symmetric powers (and
//! general plethysms) go through the character oracle in [`character`].

pub mod character;
pub mod lr;
pub mod plethysm;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Weight;

pub use character::{char_of, decompose, decompose_effective, CharPoly, SchurCache};
pub use plethysm::{cauchy_ext_power, cauchy_sym_power, ext_power, schur_power, sym_power};

/// A finite integer combination of irreducible `GL_r` representations.
///
/// Zero coefficients are never stored, so structural equality is equality in
/// the ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepElement {
    rank: usize,
    terms: BTreeMap<Weight, i64>,
}

impl RepElement {
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        RepElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::irreducible(Weight::zero(rank))
    }

    pub fn irreducible(w: Weight) -> Self {
        let mut e = RepElement::zero(w.rank());
        e.add_term(w, 1);
        e
    }

    /// Builds an element from `(weight, coefficient)` pairs of a common rank.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, i64)>,
    {
        let mut e = RepElement::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All coefficients non-negative: a genuine representation.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Weight, coeff: i64) {
        assert_eq!(w.rank(), self.rank, "weight rank does not match element");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(w) {
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
    }

    pub fn scale(&self, m: i64) -> RepElement {
        let mut out = RepElement::zero(self.rank);
        for (w, c) in self.iter() {
            out.add_term(w.clone(), c * m);
        }
        out
    }

    /// Virtual dimension: Weyl dimensions weighted by coefficients.
    pub fn dim(&self) -> i64 {
        self.iter()
            .map(|(w, c)| c * i64::try_from(weyl_dim(w)).expect("dimension overflows i64"))
            .sum()
    }

    /// `(Σ^α)^∨ = Σ^{-α}`, extended linearly.
    pub fn dual(&self) -> RepElement {
        RepElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, &c)| (w.dual(), c)).collect(),
        }
    }

    /// Tensor with `det^m`: adds `m` to every entry of every weight.
    pub fn det_twist(&self, m: i64) -> RepElement {
        RepElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, &c)| (w.twist(m), c)).collect(),
        }
    }

    /// Ring product.
    pub fn tensor(&self, other: &RepElement) -> Result<RepElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = RepElement::zero(self.rank);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let shift_a = (-a.min_entry()).max(0);
                let shift_b = (-b.min_entry()).max(0);
                let pa = a.twist(shift_a);
                let pb = b.twist(shift_b);
                for (nu, n) in lr::lr_product(pa.entries(), pb.entries(), self.rank) {
                    let nu = Weight::new(nu).expect("LR shapes are partitions");
                    out.add_term(nu.twist(-shift_a - shift_b), ca * cb * n);
                }
            }
        }
        Ok(out)
    }

    /// `self^{⊗ n}`, with `n = 0` giving the trivial representation.
    pub fn tensor_power(&self, n: usize) -> RepElement {
        (0..n).fold(RepElement::trivial(self.rank), |acc, _| {
            acc.tensor(self).expect("same rank")
        })
    }
}

/// Dimension of `Σ^w V` for `dim V = rank(w)`, by the Weyl dimension formula
/// `Π_{i<j} (w_i - w_j + j - i) / (j - i)`.
pub fn weyl_dim(w: &Weight) -> u64 {
    let e = w.entries();
    let n = e.len();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= e[i] - e[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    u64::try_from(num / den).expect("Weyl dimension fits in u64")
}

impl Add for RepElement {
    type Output = RepElement;

    /// Panics on rank mismatch.
    fn add(mut self, rhs: RepElement) -> RepElement {
        self += rhs;
        self
    }
}

impl AddAssign for RepElement {
    fn add_assign(&mut self, rhs: RepElement) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in sum");
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl Neg for RepElement {
    type Output = RepElement;

    fn neg(self) -> RepElement {
        self.scale(-1)
    }
}

impl Sub for RepElement {
    type Output = RepElement;

    fn sub(self, rhs: RepElement) -> RepElement {
        self + (-rhs)
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest weights first
        for (i, (w, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            match c.abs() {
                1 => write!(f, "Σ^{w}")?,
                n => write!(f, "{n}·Σ^{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepElement[rank {}]({self})", self.rank)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    weight: Weight,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct RepElementRepr {
    rank: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for RepElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepElementRepr {
            rank: self.rank,
            terms: self
                .iter()
                .map(|(w, c)| TermRepr {
                    weight: w.clone(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RepElementRepr::deserialize(d)?;
        if repr.rank == 0 {
            return Err(serde::de::Error::custom("rank must be positive"));
        }
        RepElement::from_terms(repr.rank, repr.terms.into_iter().map(|t| (t.weight, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn irr(v: &[i64]) -> RepElement {
        RepElement::irreducible(w(v))
    }

    fn sum(rank: usize, terms: &[(&[i64], i64)]) -> RepElement {
        RepElement::from_terms(rank, terms.iter().map(|(v, c)| (w(v), *c))).unwrap()
    }

    #[test]
    fn pieri_symmetric_square() {
        let out = irr(&[2, 1, 0]).tensor(&irr(&[2, 0, 0])).unwrap();
        let expected = sum(
            3,
            &[(&[4, 1, 0], 1), (&[3, 2, 0], 1), (&[3, 1, 1], 1), (&[2, 2, 1], 1)],
        );
        assert_eq!(out, expected);
    }

    #[test]
    fn pieri_exterior_square() {
        let out = irr(&[2, 1, 0]).tensor(&irr(&[1, 1, 0])).unwrap();
        let expected = sum(3, &[(&[3, 2, 0], 1), (&[3, 1, 1], 1), (&[2, 2, 1], 1)]);
        assert_eq!(out, expected);
    }

    #[test]
    fn unit_and_negative_weights() {
        let a = sum(2, &[(&[3, -1], 2), (&[0, 0], -1)]);
        assert_eq!(a.tensor(&RepElement::trivial(2)).unwrap(), a);
        // Σ^{2,1} ⊗ Σ^{0,-1} = Σ^{2,0} + Σ^{1,1}, frozen from the character oracle
        let out = irr(&[2, 1]).tensor(&irr(&[0, -1])).unwrap();
        assert_eq!(out, sum(2, &[(&[2, 0], 1), (&[1, 1], 1)]));
        assert!(CharPoly::same_as(
            &char_of(&irr(&[2, 1])).mul(&char_of(&irr(&[0, -1]))),
            &out
        ));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert_eq!(
            irr(&[1, 0]).tensor(&irr(&[1, 0, 0])),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(irr(&[3, 1]).dual(), irr(&[-1, -3]));
        assert_eq!(RepElement::trivial(4).dual(), RepElement::trivial(4));
        let a = sum(3, &[(&[2, 0, -1], 3), (&[1, 1, 0], -2)]);
        assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn det_twist_examples() {
        assert_eq!(irr(&[3, 0]).det_twist(-1), irr(&[2, -1]));
        let a = sum(2, &[(&[3, -1], 2), (&[1, 1], 1)]);
        assert_eq!(a.det_twist(0), a);
        assert_eq!(a.det_twist(5).det_twist(-5), a);
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&Weight::zero(6)), 1);
        for a in -4..6 {
            for b in -6..=a {
                assert_eq!(weyl_dim(&w(&[a, b])), (a - b + 1) as u64);
            }
        }
        for d in 2..13 {
            assert_eq!(weyl_dim(&Weight::adjoint(d)), (d * d - 1) as u64);
        }
    }

    #[test]
    fn weyl_dim_matches_monomial_count() {
        let mut cache = SchurCache::new();
        for d in 2..7 {
            let adj = Weight::adjoint(d);
            assert_eq!(cache.schur(adj.entries()).eval_ones() as u64, weyl_dim(&adj));
        }
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = irr(&[1, 0]);
        a.add_term(w(&[1, 0]), -1);
        assert!(a.is_zero());
        assert_eq!(a, RepElement::zero(2));
    }

    #[test]
    fn json_schema() {
        let a = sum(2, &[(&[3, -1], 2)]);
        let json = serde_json::to_value(&a).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"rank": 2, "terms": [{"weight": [3, -1], "coeff": 2}]})
        );
        let back: RepElement = serde_json::from_value(json).unwrap();
        assert_eq!(back, a);
        let bad = serde_json::json!({"rank": 2, "terms": [{"weight": [1, 0, 0], "coeff": 1}]});
        assert!(serde_json::from_value::<RepElement>(bad).is_err());
    }

    #[test]
    fn display_lists_highest_first() {
        let a = sum(2, &[(&[3, -1], 2), (&[1, 1], 1), (&[2, 0], 1)]);
        assert_eq!(a.to_string(), "2·Σ^(3,-1) + Σ^(2,0) + Σ^(1,1)");
    }
}
