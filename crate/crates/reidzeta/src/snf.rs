//! Smith normal form of integer matrices.
//!
//! Used as the lattice-index oracle: the twisted conjugacy classes of
//! `x -> Ax` on `Z^n` biject with the cokernel of `I - A`, whose order is
//! the product of the invariant factors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;

/// Row-major matrix over Z.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .flat_map(|row| row.iter().map(|&v| BigInt::from(v)))
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn to_rat_matrix(&self) -> RatMatrix {
        RatMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .map(|e| crate::rat::Rat::from_integer(e.clone()))
                .collect(),
        )
        .expect("shape already validated")
    }

    /// Exact integer image of a rational matrix, if it has one.
    pub fn from_rat_matrix(m: &RatMatrix) -> Option<IntMatrix> {
        m.to_int_entries().map(|entries| IntMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Invariant factors: non-negative, consecutive nonzero entries divide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Product of the nonzero invariant factors; `|det|` for square
    /// nonsingular input, and the cokernel order when the rank is full.
    pub fn invariant_product(&self) -> BigInt {
        self.diagonal.iter().filter(|d| !d.is_zero()).product()
    }
}

/// Diagonalizes over Z by elementary row/column operations.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let n = rows.min(cols);
    let mut diagonal = vec![BigInt::zero(); n];

    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing submatrix becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if a.get(r, c).is_zero() {
                        continue;
                    }
                    let better = match &pivot {
                        None => true,
                        Some((pr, pc)) => a.get(r, c).abs() < a.get(*pr, *pc).abs(),
                    };
                    if better {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                // trailing submatrix is zero; done
                return finish(diagonal, t);
            };
            swap_rows(&mut a, t, pr);
            swap_cols(&mut a, t, pc);

            let mut dirty = false;
            for r in t + 1..rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t) / a.get(t, t);
                if !q.is_zero() {
                    for c in t..cols {
                        let delta = &q * a.get(t, c);
                        *a.get_mut(r, c) -= delta;
                    }
                }
                if !a.get(r, t).is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c) / a.get(t, t);
                if !q.is_zero() {
                    for r in t..rows {
                        let delta = &q * a.get(r, t);
                        *a.get_mut(r, c) -= delta;
                    }
                }
                if !a.get(t, c).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot now clears its row and column; make it divide the rest
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !(a.get(r, c) % a.get(t, t)).is_zero());
            match offender {
                Some((r, _)) => {
                    for c in t..cols {
                        let v = a.get(r, c).clone();
                        *a.get_mut(t, c) += v;
                    }
                }
                None => {
                    diagonal[t] = a.get(t, t).abs();
                    break;
                }
            }
        }
    }
    finish(diagonal, n)
}

fn finish(diagonal: Vec<BigInt>, _filled: usize) -> SnfResult {
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SnfResult { diagonal, rank }
}

fn swap_rows(a: &mut IntMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        a.entries.swap(r1 * a.cols + c, r2 * a.cols + c);
    }
}

fn swap_cols(a: &mut IntMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..a.rows {
        a.entries.swap(r * a.cols + c1, r * a.cols + c2);
    }
}
