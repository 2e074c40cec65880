//! Plethysms `Λ^m E`, `S^m E` and `Σ^λ E` of an effective element `E`.
//!
//! The weights of `E` (monomials of its character, with multiplicity) are fed
//! into the generating functions `Π (1 + t x^w)` and `Π 1/(1 - t x^w)`; the
//! `t^m` coefficient is then decomposed back into Schur functors. General
//! `Σ^λ E` uses the Jacobi–Trudi determinant in the `S^k E`.

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, transpose, Weight};

use super::character::{char_of_with, decompose_effective, CharPoly, SchurCache};
use super::RepElement;

#[derive(Clone, Copy)]
enum Kind {
    Exterior,
    Symmetric,
}

/// Characters of `Λ^j E` (or `S^j E`) for `j = 0..=m`.
fn power_chars(a: &RepElement, m: usize, kind: Kind) -> Result<Vec<CharPoly>> {
    if !a.is_effective() {
        return Err(Error::NotEffective);
    }
    let rank = a.rank();
    let chi = char_of_with(a, &mut SchurCache::new());
    let mut powers = vec![CharPoly::zero(rank); m + 1];
    powers[0] = CharPoly::one(rank);
    for (exponent, &mult) in chi.terms() {
        debug_assert!(mult > 0);
        for _ in 0..mult {
            match kind {
                Kind::Exterior => {
                    for j in (1..=m).rev() {
                        let step = powers[j - 1].shifted(exponent);
                        powers[j].add_scaled(&step, 1);
                    }
                }
                Kind::Symmetric => {
                    for j in 1..=m {
                        let step = powers[j - 1].shifted(exponent);
                        powers[j].add_scaled(&step, 1);
                    }
                }
            }
        }
    }
    Ok(powers)
}

/// `Λ^m E` for an effective `E`.
pub fn ext_power(a: &RepElement, m: usize) -> Result<RepElement> {
    let chars = power_chars(a, m, Kind::Exterior)?;
    decompose_effective(&chars[m])
}

/// `S^m E` for an effective `E`.
pub fn sym_power(a: &RepElement, m: usize) -> Result<RepElement> {
    let chars = power_chars(a, m, Kind::Symmetric)?;
    decompose_effective(&chars[m])
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `Σ^λ E` for a partition `λ` and an effective `E`, via
/// `s_λ = det(h_{λ_i - i + j})`.
pub fn schur_power(a: &RepElement, lambda: &Weight) -> Result<RepElement> {
    if !lambda.is_partition() {
        return Err(Error::NegativeEntry(lambda.entries().to_vec()));
    }
    let parts = lambda.stripped();
    let len = parts.len();
    if len == 0 {
        return Ok(RepElement::trivial(a.rank()));
    }
    let top = (parts[0] as usize) + len;
    let h = power_chars(a, top, Kind::Symmetric)?;
    let entry = |i: usize, j: usize| -> Option<&CharPoly> {
        let k = parts[i] - i as i64 + j as i64;
        (k >= 0).then(|| &h[k as usize])
    };
    let mut total = CharPoly::zero(a.rank());
    'perm: for (sigma, sign) in permutations(len) {
        let mut product = CharPoly::one(a.rank());
        for (i, &j) in sigma.iter().enumerate() {
            match entry(i, j) {
                Some(p) => product = product.mul(p),
                None => continue 'perm,
            }
        }
        total.add_scaled(&product, sign);
    }
    decompose_effective(&total)
}

fn cauchy(e: &RepElement, f: &RepElement, m: usize, conjugate: bool) -> Result<RepElement> {
    if e.rank() != f.rank() {
        return Err(Error::RankMismatch {
            left: e.rank(),
            right: f.rank(),
        });
    }
    let mut out = RepElement::zero(e.rank());
    if m == 0 {
        return Ok(RepElement::trivial(e.rank()));
    }
    for alpha in partitions_of(m, m) {
        let beta = if conjugate {
            transpose(&alpha)?
        } else {
            alpha.clone()
        };
        let left = schur_power(e, &alpha)?;
        if left.is_zero() {
            continue;
        }
        let right = schur_power(f, &beta)?;
        out += left.tensor(&right)?;
    }
    Ok(out)
}

/// `Λ^m(E ⊗ F) = ⊕_{|α| = m} Σ^α E ⊗ Σ^{α'} F`, with both factors
/// representations of the same group so the result lands back in the ring.
pub fn cauchy_ext_power(e: &RepElement, f: &RepElement, m: usize) -> Result<RepElement> {
    cauchy(e, f, m, true)
}

/// `S^m(E ⊗ F) = ⊕_{|α| = m} Σ^α E ⊗ Σ^α F`.
pub fn cauchy_sym_power(e: &RepElement, f: &RepElement, m: usize) -> Result<RepElement> {
    cauchy(e, f, m, false)
}
