//! Characters as symmetric Laurent polynomials, used as an oracle that is
//! independent of the Littlewood–Richardson path.
//!
//! Schur polynomials are generated from Gelfand–Tsetlin patterns (the
//! branching rule `s_λ(x_1..x_r) = Σ_μ s_μ(x_1..x_{r-1}) x_r^{|λ|-|μ|}` over
//! all `μ` interlacing `λ`), which works for negative entries without any
//! determinant shift.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partitions::Weight;

use super::RepElement;

/// A Laurent polynomial in `rank` variables, exponent vector → coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    rank: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl CharPoly {
    pub fn zero(rank: usize) -> Self {
        CharPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 1)
    }

    pub fn monomial(exponent: Vec<i64>, coeff: i64) -> Self {
        let mut p = CharPoly::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &[i64]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: i64) {
        debug_assert_eq!(exponent.len(), self.rank);
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &CharPoly, scale: i64) {
        assert_eq!(self.rank, other.rank, "character rank mismatch");
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c * scale);
        }
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        assert_eq!(self.rank, other.rank, "character rank mismatch");
        let mut out = CharPoly::zero(self.rank);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shifted(&self, shift: &[i64]) -> CharPoly {
        CharPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c))
                .collect(),
        }
    }

    /// Value at `x = (1, ..., 1)`, i.e. the (virtual) dimension.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, &c)| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.coeff(&sorted) == c
        })
    }

    /// Coefficient-wise equality with the character of `e`.
    pub fn same_as(&self, e: &RepElement) -> bool {
        *self == char_of(e)
    }
}

/// Gelfand–Tsetlin expansion with memoisation over intermediate rows.
#[derive(Default)]
pub struct SchurCache {
    memo: HashMap<Vec<i64>, BTreeMap<Vec<i64>, i64>>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The Schur polynomial `s_λ(x_1, ..., x_r)` for a dominant `λ` of rank `r`.
    pub fn schur(&mut self, lambda: &[i64]) -> CharPoly {
        CharPoly {
            rank: lambda.len(),
            terms: self.expand(lambda).clone(),
        }
    }

    fn expand(&mut self, lambda: &[i64]) -> &BTreeMap<Vec<i64>, i64> {
        if !self.memo.contains_key(lambda) {
            let terms = self.compute(lambda);
            self.memo.insert(lambda.to_vec(), terms);
        }
        &self.memo[lambda]
    }

    fn compute(&mut self, lambda: &[i64]) -> BTreeMap<Vec<i64>, i64> {
        let n = lambda.len();
        if n == 1 {
            return BTreeMap::from([(lambda.to_vec(), 1)]);
        }
        let total: i64 = lambda.iter().sum();
        let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        // μ_i ranges over [λ_{i+1}, λ_i]
        let mut mu: Vec<i64> = lambda[1..].to_vec();
        loop {
            let last = total - mu.iter().sum::<i64>();
            let sub = self.expand(&mu).clone();
            for (e, c) in sub {
                let mut e = e;
                e.push(last);
                *out.entry(e).or_insert(0) += c;
            }
            // odometer over the interlacing box
            let mut i = 0;
            loop {
                if i == n - 1 {
                    return out;
                }
                if mu[i] < lambda[i] {
                    mu[i] += 1;
                    break;
                }
                mu[i] = lambda[i + 1];
                i += 1;
            }
        }
    }
}

/// Character of an element of the representation ring.
pub fn char_of(a: &RepElement) -> CharPoly {
    let mut cache = SchurCache::new();
    char_of_with(a, &mut cache)
}

pub(crate) fn char_of_with(a: &RepElement, cache: &mut SchurCache) -> CharPoly {
    let mut out = CharPoly::zero(a.rank());
    for (w, c) in a.iter() {
        out.add_scaled(&cache.schur(w.entries()), c);
    }
    out
}

/// Inverts [`char_of`] by repeatedly peeling the Schur character of the
/// lexicographically largest remaining exponent. Virtual characters are
/// allowed.
pub fn decompose(c: &CharPoly) -> Result<RepElement> {
    peel(c, false)
}

/// Like [`decompose`], but fails as soon as a negative multiplicity appears.
pub fn decompose_effective(c: &CharPoly) -> Result<RepElement> {
    peel(c, true)
}

fn peel(c: &CharPoly, effective: bool) -> Result<RepElement> {
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut cache = SchurCache::new();
    let mut rest = c.clone();
    let mut out = RepElement::zero(c.rank);
    while let Some((top, &coeff)) = rest.terms.last_key_value() {
        let top = top.clone();
        if effective && coeff < 0 {
            return Err(Error::NotACharacter { weight: top, coeff });
        }
        let w = Weight::new(top.clone()).map_err(|_| Error::NotSymmetric)?;
        rest.add_scaled(&cache.schur(&top), -coeff);
        out.add_term(w, coeff);
    }
    Ok(out)
}
