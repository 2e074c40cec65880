//! Littlewood–Richardson multiplication of partitions.
//!
//! Skew tableaux of shape `nu / a` and content `b` are built one label at a
//! time: the boxes labelled `l` form a horizontal strip on top of the shape
//! reached after labels `0..l`, and the row-reading word (right to left, top
//! to bottom) must stay a lattice word. Row counts per label are enough to
//! check the lattice condition, since within a row larger labels sit to the
//! right and are read first.

use std::collections::BTreeMap;

struct Filler<'a> {
    content: &'a [i64],
    max_rows: usize,
    shape: Vec<i64>,
    // counts[l][r]: boxes with label l in row r
    counts: Vec<Vec<i64>>,
    out: BTreeMap<Vec<i64>, i64>,
}

impl Filler<'_> {
    fn label(&mut self, l: usize) {
        if l == self.content.len() {
            *self.out.entry(self.shape.clone()).or_insert(0) += 1;
            return;
        }
        let old = self.shape.clone();
        self.strip(l, 0, self.content[l], &old, 0, 0);
    }

    fn strip(
        &mut self,
        l: usize,
        row: usize,
        remaining: i64,
        old: &[i64],
        prev_above: i64,
        placed: i64,
    ) {
        if remaining == 0 {
            self.label(l + 1);
            return;
        }
        if row >= self.max_rows {
            return;
        }
        let mut cap = if row == 0 {
            remaining
        } else {
            remaining.min(old[row - 1] - old[row])
        };
        if l > 0 {
            // labels l-1 strictly above this row must outnumber labels l up to and including it
            cap = cap.min(prev_above - placed);
        }
        let prev_here = if l > 0 { self.counts[l - 1][row] } else { 0 };
        for x in (0..=cap).rev() {
            self.shape[row] += x;
            self.counts[l][row] = x;
            self.strip(l, row + 1, remaining - x, old, prev_above + prev_here, placed + x);
            self.shape[row] -= x;
            self.counts[l][row] = 0;
        }
    }
}

/// Littlewood–Richardson product `s_a * s_b` restricted to partitions with at
/// most `max_rows` rows. Inputs are partitions (non-increasing, non-negative),
/// the output keys have exactly `max_rows` entries.
pub fn lr_product(a: &[i64], b: &[i64], max_rows: usize) -> BTreeMap<Vec<i64>, i64> {
    let a_len = a.iter().take_while(|&&e| e > 0).count();
    let b_len = b.iter().take_while(|&&e| e > 0).count();
    if a_len > max_rows || b_len > max_rows {
        return BTreeMap::new();
    }
    // the product is symmetric; fill with the smaller content
    let (base, content) = if a.iter().sum::<i64>() >= b.iter().sum::<i64>() {
        (&a[..a_len], &b[..b_len])
    } else {
        (&b[..b_len], &a[..a_len])
    };
    let mut shape = base.to_vec();
    shape.resize(max_rows, 0);
    let mut filler = Filler {
        content,
        max_rows,
        shape,
        counts: vec![vec![0; max_rows]; content.len()],
        out: BTreeMap::new(),
    };
    filler.label(0);
    filler.out
}
