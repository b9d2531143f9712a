use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::Rational;
use crate::error::{Error, Result};

/// How [`PolyMatrix::det_with`] evaluates a determinant. Every strategy gives
/// the same polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetStrategy {
    /// Eliminate on constant pivots first, then cofactor expansion for small
    /// residual blocks and fraction-free elimination for large ones.
    #[default]
    Auto,
    /// Laplace expansion with memoised minors.
    Cofactor,
    /// Bareiss fraction-free elimination with exact polynomial division.
    Bareiss,
}

/// Dense rectangular matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { expected: rows * cols, got: entries.len() });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * m);
        for r in rows {
            if r.len() != m {
                return Err(Error::Shape { expected: m, got: r.len() });
            }
            entries.extend(r);
        }
        Ok(PolyMatrix { rows: n, cols: m, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> MultiPoly>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { MultiPoly::one() } else { MultiPoly::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Copy with rows `a` and `b` exchanged.
    pub fn swap_rows(&self, a: usize, b: usize) -> PolyMatrix {
        let mut out = self.clone();
        for j in 0..self.cols {
            out.entries.swap(a * self.cols + j, b * self.cols + j);
        }
        out
    }

    /// Applies `f` to every entry.
    pub fn map<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn det(&self) -> Result<MultiPoly> {
        self.det_with(DetStrategy::Auto)
    }

    pub fn det_with(&self, strategy: DetStrategy) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let grid: Vec<Vec<MultiPoly>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        Ok(match strategy {
            DetStrategy::Cofactor => cofactor(&grid),
            DetStrategy::Bareiss => bareiss(grid),
            DetStrategy::Auto => {
                let (factor, rest) = eliminate_constant_pivots(grid);
                if factor.is_zero() {
                    return Ok(MultiPoly::zero());
                }
                let d = if rest.len() <= 4 { cofactor(&rest) } else { bareiss(rest) };
                d.scale(&factor)
            }
        })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Repeatedly pivots on nonzero constant entries. Returns the accumulated
/// scalar factor and the residual block whose determinant remains.
fn eliminate_constant_pivots(mut m: Vec<Vec<MultiPoly>>) -> (Rational, Vec<Vec<MultiPoly>>) {
    let mut factor = Rational::one();
    loop {
        let n = m.len();
        // Markowitz choice: the constant pivot with the least fill-in
        let row_terms: Vec<usize> = m.iter().map(|r| r.iter().map(MultiPoly::num_terms).sum()).collect();
        let col_terms: Vec<usize> = (0..n).map(|j| m.iter().map(|r| r[j].num_terms()).sum()).collect();
        let mut pivot: Option<(usize, usize, Rational)> = None;
        let mut best = usize::MAX;
        for (i, row) in m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Some(c) = e.as_constant() {
                    let cost = row_terms[i].saturating_sub(1) * col_terms[j].saturating_sub(1);
                    if !c.is_zero() && cost < best {
                        best = cost;
                        pivot = Some((i, j, c));
                    }
                }
            }
        }
        let Some((p, q, c)) = pivot else { return (factor, m) };
        if (p + q) % 2 == 1 {
            factor = -factor;
        }
        factor *= &c;
        let inv = c.recip();
        let pivot_row = m[p].clone();
        let mut next = Vec::with_capacity(n - 1);
        for (i, row) in m.into_iter().enumerate() {
            if i == p {
                continue;
            }
            let lead = row[q].scale(&inv);
            let mut new_row = Vec::with_capacity(n - 1);
            for (j, e) in row.into_iter().enumerate() {
                if j == q {
                    continue;
                }
                if lead.is_zero() || pivot_row[j].is_zero() {
                    new_row.push(e);
                } else {
                    new_row.push(e - &lead * &pivot_row[j]);
                }
            }
            next.push(new_row);
        }
        m = next;
        if m.iter().any(|r| r.iter().all(MultiPoly::is_zero)) {
            return (Rational::zero(), m);
        }
    }
}

fn cofactor(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
    minor(m, 0, (1u64 << n) - 1, &mut memo)
}

/// Determinant of rows `row..n` against the columns in `cols`.
fn minor(m: &[Vec<MultiPoly>], row: usize, cols: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
    if cols == 0 {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = MultiPoly::zero();
    let mut sign_negative = false;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let e = &m[row][j];
        if !e.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let term = e * &sub;
                if sign_negative {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

fn bareiss(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
