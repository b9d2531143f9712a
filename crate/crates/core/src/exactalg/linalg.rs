use num_traits::{One, Zero};

use super::Rational;

/// Incrementally maintained reduced row echelon form over ℚ.
///
/// Columns are ordered by significance: the pivot of a row is its first
/// nonzero column. Every stored row has a unit pivot and zeros in the pivot
/// columns of all other rows.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Reduces `v` against the stored rows; the result vanishes on every
    /// pivot column.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols, "vector length must match column count");
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (k, r) in row.iter().enumerate().skip(*p) {
                if !r.is_zero() {
                    v[k] -= &f * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank increased.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else { return false };
        let inv = v[p].recip();
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        debug_assert!(v[p].is_one());
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (k, c) in v.iter().enumerate().skip(p) {
                if !c.is_zero() {
                    row[k] -= &f * c;
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Rank of a rational matrix given as rows. Rows of unequal length are
/// treated as zero-padded on the right.
pub fn rank_over_q(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut ech = RowEchelon::new(ncols);
    for r in rows {
        let mut v = r.clone();
        v.resize(ncols, Rational::zero());
        ech.insert(v);
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}
