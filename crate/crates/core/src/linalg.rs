//! Division-free determinant and Pfaffian over [`LaurentPoly`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// Dense row-major matrix of polynomials in a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    n: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn new(n: usize, rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        if let Some(e) = entries.iter().find(|e| e.n() != n) {
            return Err(Error::VariableCountMismatch {
                left: n,
                right: e.n(),
            });
        }
        Ok(RingMatrix {
            n,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(n: usize, rows: usize, cols: usize) -> Self {
        RingMatrix {
            n,
            rows,
            cols,
            entries: vec![LaurentPoly::zero(n); rows * cols],
        }
    }

    pub fn from_fn(
        n: usize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix::new(n, rows, cols, entries)
    }

    pub fn identity(n: usize, size: usize) -> Self {
        let mut m = RingMatrix::zeros(n, size, size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one(n));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    /// Panics if `v` lives in a different ring.
    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        assert_eq!(v.n(), self.n, "entry from a different ring");
        self.entries[i * self.cols + j] = v;
    }

    /// Simultaneous swap of rows `a, b` and columns `a, b`.
    pub fn swap_indices(&self, a: usize, b: usize) -> RingMatrix {
        let p = |i: usize| if i == a { b } else if i == b { a } else { i };
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * self.cols + j] = self.get(p(i), p(j)).clone();
            }
        }
        out
    }

    /// Errors with the first offending pair, 0-based.
    pub fn check_skew_symmetric(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return Err(Error::NotSkewSymmetric { i, j: i });
            }
            for j in i + 1..self.cols {
                if self.get(i, j) != &-self.get(j, i) {
                    return Err(Error::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Laplace expansion along the first remaining row, memoized on the set of
/// columns still available.
pub fn determinant(a: &RingMatrix) -> Result<LaurentPoly> {
    if a.rows != a.cols {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let size = a.rows;
    if size > 63 {
        return Err(Error::Precondition("matrix too large".into()));
    }
    let mut memo = HashMap::new();
    Ok(det_rec(a, (1u64 << size) - 1, &mut memo))
}

fn det_rec(a: &RingMatrix, cols: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
    if cols == 0 {
        return LaurentPoly::one(a.n);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let row = a.rows - cols.count_ones() as usize;
    let mut acc = LaurentPoly::zero(a.n);
    let mut pos = 0;
    for j in 0..a.cols {
        if cols >> j & 1 == 0 {
            continue;
        }
        let e = a.get(row, j);
        if !e.is_zero() {
            let term = e * &det_rec(a, cols & !(1 << j), memo);
            if pos % 2 == 0 {
                acc.add_assign_ref(&term);
            } else {
                acc = &acc - &term;
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Expansion along the first surviving index, memoized on the bitmask of
/// surviving indices. Checks skew-symmetry first.
pub fn pfaffian(a: &RingMatrix) -> Result<LaurentPoly> {
    a.check_skew_symmetric()?;
    let size = a.rows;
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    if size > 63 {
        return Err(Error::Precondition("matrix too large".into()));
    }
    let mut memo = HashMap::new();
    Ok(pf_rec(a, (1u64 << size) - 1, &mut memo))
}

fn pf_rec(a: &RingMatrix, alive: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
    if alive == 0 {
        return LaurentPoly::one(a.n);
    }
    if let Some(v) = memo.get(&alive) {
        return v.clone();
    }
    let i = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << i);
    let mut acc = LaurentPoly::zero(a.n);
    let mut pos = 0;
    for j in i + 1..a.rows {
        if rest >> j & 1 == 0 {
            continue;
        }
        let e = a.get(i, j);
        if !e.is_zero() {
            let term = e * &pf_rec(a, rest & !(1 << j), memo);
            if pos % 2 == 0 {
                acc.add_assign_ref(&term);
            } else {
                acc = &acc - &term;
            }
        }
        pos += 1;
    }
    memo.insert(alive, acc.clone());
    acc
}
