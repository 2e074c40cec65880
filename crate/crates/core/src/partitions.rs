//! Highest weights of `GL_r` and the combinatorics of Young diagrams.
//!
//! A [`Weight`] is a non-increasing integer vector of fixed length. Entries may
//! be negative; such weights are polynomial representations twisted by a
//! negative power of the determinant. Weights are stored dense, zero tail
//! included, so that the rank is always `entries.len()`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Highest weight of an irreducible rational `GL_r` representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(Weight { entries })
    }

    /// The trivial weight `(0, ..., 0)` of rank `rank`.
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Weight { entries: vec![0; rank] }
    }

    /// `(m, ..., m)`, the `m`-th power of the determinant.
    pub fn det_power(rank: usize, m: i64) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Weight { entries: vec![m; rank] }
    }

    /// `(m, 0, ..., 0)`, the `m`-th symmetric power.
    pub fn sym(rank: usize, m: i64) -> Self {
        assert!(rank >= 1 && m >= 0);
        let mut entries = vec![0; rank];
        entries[0] = m;
        Weight { entries }
    }

    /// `(1, ..., 1, 0, ..., 0)` with `m` ones, or `None` when `m > rank`.
    pub fn wedge(rank: usize, m: usize) -> Option<Self> {
        assert!(rank >= 1);
        (m <= rank).then(|| {
            let mut entries = vec![0; rank];
            entries[..m].iter_mut().for_each(|e| *e = 1);
            Weight { entries }
        })
    }

    /// `(1, 0, ..., 0, -1)`: the highest weight of the traceless endomorphisms.
    pub fn adjoint(rank: usize) -> Self {
        assert!(rank >= 2, "adjoint weight needs rank >= 2");
        let mut entries = vec![0; rank];
        entries[0] = 1;
        entries[rank - 1] = -1;
        Weight { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    /// Number of boxes, `|w|`. Negative for weights with negative total.
    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.min_entry() >= 0
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn first(&self) -> i64 {
        self.entries[0]
    }

    pub fn min_entry(&self) -> i64 {
        *self.entries.last().expect("weights are non-empty")
    }

    /// Number of non-zero entries of a partition.
    pub fn length(&self) -> usize {
        self.entries.iter().take_while(|&&e| e > 0).count()
    }

    /// `-w = (-w_r, ..., -w_1)`, the highest weight of the dual representation.
    pub fn dual(&self) -> Weight {
        Weight {
            entries: self.entries.iter().rev().map(|e| -e).collect(),
        }
    }

    /// Adds `m` to every entry (tensoring with `det^m`).
    pub fn twist(&self, m: i64) -> Weight {
        Weight {
            entries: self.entries.iter().map(|e| e + m).collect(),
        }
    }

    /// Re-embeds a partition into rank `rank`, padding with zeros.
    /// Returns `None` when the partition has more than `rank` non-zero rows,
    /// i.e. when the Schur functor vanishes in that rank.
    pub fn padded(&self, rank: usize) -> Option<Weight> {
        debug_assert!(self.is_partition());
        let len = self.length();
        if len > rank || rank == 0 {
            return None;
        }
        let mut entries = self.entries[..len].to_vec();
        entries.resize(rank, 0);
        Some(Weight { entries })
    }

    /// The non-zero prefix of a partition.
    pub fn stripped(&self) -> &[i64] {
        &self.entries[..self.length()]
    }

    /// Concatenation `(self || other)`; the result need not be dominant.
    pub fn concat(&self, other: &Weight) -> Vec<i64> {
        self.entries.iter().chain(other.entries.iter()).copied().collect()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        Weight::new(entries)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.entries
    }
}

/// Parses the comma-separated syntax `"3,-1"`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Weight::new(entries)
    }
}

/// The Weyl vector `rho = (d, d-1, ..., 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylVector {
    entries: Vec<i64>,
}

impl WeylVector {
    pub fn new(d: usize) -> Self {
        WeylVector {
            entries: (1..=d as i64).rev().collect(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Conjugate partition. The result has exactly `p_1` entries (or a single
/// zero for the empty partition).
pub fn transpose(p: &Weight) -> Result<Weight> {
    if !p.is_partition() {
        return Err(Error::NegativeEntry(p.entries.clone()));
    }
    let cols = p.first() as usize;
    if cols == 0 {
        return Ok(Weight::zero(1));
    }
    let entries = (1..=cols as i64)
        .map(|c| p.entries.iter().filter(|&&row| row >= c).count() as i64)
        .collect();
    Ok(Weight { entries })
}

/// Hook (Frobenius) coordinates `(u | v)`: `u_i` is the length of the i-th
/// diagonal arm and `v_i` of the i-th diagonal leg, both counting the diagonal
/// box itself, so that `(1 | 2) = (1,1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hook {
    pub arms: Vec<i64>,
    pub legs: Vec<i64>,
}

fn strictly_decreasing_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] > w[1])
}

/// Builds the partition with the given diagonal arms and legs.
pub fn from_hook(arms: &[i64], legs: &[i64]) -> Result<Weight> {
    if arms.len() != legs.len() {
        return Err(Error::InvalidHook(format!(
            "{} arms but {} legs",
            arms.len(),
            legs.len()
        )));
    }
    if arms.is_empty() {
        return Err(Error::InvalidHook("empty hook".into()));
    }
    if !strictly_decreasing_positive(arms) || !strictly_decreasing_positive(legs) {
        return Err(Error::InvalidHook(format!(
            "arms {arms:?} and legs {legs:?} must be strictly decreasing and positive"
        )));
    }
    let r = arms.len();
    let col_len = |j: usize| legs[j] + j as i64;
    let rows = legs[0] as usize;
    let mut entries = Vec::with_capacity(rows);
    for (i, a) in arms.iter().enumerate().take(rows) {
        entries.push(a + i as i64);
    }
    for i in r..rows {
        let row = i as i64 + 1;
        entries.push((0..r).filter(|&j| col_len(j) >= row).count() as i64);
    }
    let w = Weight::new(entries).map_err(|_| Error::InvalidHook(format!("{arms:?}|{legs:?}")))?;
    let back = to_hook(&w)?;
    if back.arms != arms || back.legs != legs {
        return Err(Error::InvalidHook(format!(
            "{arms:?}|{legs:?} does not describe a diagram"
        )));
    }
    Ok(w)
}

/// Inverse of [`from_hook`] on non-empty partitions.
pub fn to_hook(p: &Weight) -> Result<Hook> {
    let conj = transpose(p)?;
    let rows = p.stripped();
    let cols = conj.stripped();
    let diag = rows
        .iter()
        .enumerate()
        .take_while(|&(i, &row)| row > i as i64)
        .count();
    if diag == 0 {
        return Err(Error::InvalidHook("empty partition has no hook form".into()));
    }
    Ok(Hook {
        arms: (0..diag).map(|i| rows[i] - i as i64).collect(),
        legs: (0..diag).map(|i| cols[i] - i as i64).collect(),
    })
}

/// The total order `≺` on partitions: more boxes come first; equal sizes are
/// ordered lexicographically with the larger first row first.
///
/// `Ordering::Less` means `a ≺ b`.
pub fn compare(a: &Weight, b: &Weight) -> Ordering {
    debug_assert!(a.is_partition() && b.is_partition());
    b.size()
        .cmp(&a.size())
        .then_with(|| b.stripped().cmp(a.stripped()))
}

/// Convenience: `a ≺ b` strictly.
pub fn precedes(a: &Weight, b: &Weight) -> bool {
    compare(a, b) == Ordering::Less
}

/// All partitions with at most `rows` rows and at most `cols` columns, as
/// rank-`rows` weights, sorted by [`compare`].
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Weight> {
    fn go(rows: usize, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == rows {
            out.push(Weight { entries: prefix.clone() });
            return;
        }
        for e in (0..=bound).rev() {
            prefix.push(e);
            go(rows, e, prefix, out);
            prefix.pop();
        }
    }
    assert!(rows >= 1);
    let mut out = Vec::new();
    go(rows, cols as i64, &mut Vec::with_capacity(rows), &mut out);
    out.sort_by(compare);
    out
}

/// All partitions of `n` with at most `rows` rows, as rank-`rows` weights,
/// in decreasing lexicographic order.
pub fn partitions_of(n: usize, rows: usize) -> Vec<Weight> {
    fn go(rows: usize, remaining: i64, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == rows {
            if remaining == 0 {
                out.push(Weight { entries: prefix.clone() });
            }
            return;
        }
        for e in (0..=bound.min(remaining)).rev() {
            prefix.push(e);
            go(rows, remaining - e, e, prefix, out);
            prefix.pop();
        }
    }
    assert!(rows >= 1);
    let mut out = Vec::new();
    go(rows, n as i64, n as i64, &mut Vec::with_capacity(rows), &mut out);
    out
}
