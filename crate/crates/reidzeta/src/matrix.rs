//! Dense matrices over Q: exact determinants, inverses, characteristic
//! polynomials and exterior powers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rat::{rat_to_string, Rat};

/// Row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    /// Builds from row slices of small integers; for tests and literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| crate::rat::rat_int(v)))
            .collect();
        RatMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn trace(&self) -> Result<Rat> {
        let n = self.require_square()?;
        Ok((0..n).fold(Rat::zero(), |acc, i| acc + self.get(i, i)))
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &RatMatrix, f: impl Fn(&Rat, &Rat) -> Rat) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.get_mut(i, j) = out.get(i, j) + a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product (column convention).
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn pow(&self, e: u64) -> Result<RatMatrix> {
        let n = self.require_square()?;
        let mut result = RatMatrix::identity(n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Exact determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> Result<Rat> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m.get(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(Rat::zero()),
            };
            if pivot_row != col {
                m.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    *m.get_mut(r, c) = m.get(r, c) - &factor * m.get(col, c);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            m.swap_rows(pivot_row, col);
            inv.swap_rows(pivot_row, col);
            let pivot = m.get(col, col).clone();
            let pinv = pivot.recip();
            for c in 0..n {
                *m.get_mut(col, c) = m.get(col, c) * &pinv;
                *inv.get_mut(col, c) = inv.get(col, c) * &pinv;
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..n {
                    *m.get_mut(r, c) = m.get(r, c) - &factor * m.get(col, c);
                    *inv.get_mut(r, c) = inv.get(r, c) - &factor * inv.get(col, c);
                }
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(xI - M)`, monic, by the
    /// Faddeev-LeVerrier recurrence (all divisions are by integers).
    pub fn char_poly(&self) -> Result<RatPoly> {
        let n = self.require_square()?;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut mk = self.clone();
        for k in 1..=n {
            let c = -(mk.trace()? / Rat::from_integer(BigInt::from(k)));
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = mk;
                for i in 0..n {
                    *shifted.get_mut(i, i) = shifted.get(i, i) + &c;
                }
                mk = self.mul(&shifted)?;
            }
        }
        Ok(RatPoly::new(coeffs))
    }

    /// `k`-th exterior power: minors indexed by lexicographically ordered
    /// `k`-subsets of the rows/columns.
    pub fn exterior_power(&self, k: usize) -> Result<RatMatrix> {
        let n = self.require_square()?;
        if k > n {
            return Err(Error::ExteriorIndex { k, dim: n });
        }
        let subsets = k_subsets(n, k);
        let size = subsets.len();
        let mut out = RatMatrix::zeros(size, size);
        for (i, rows) in subsets.iter().enumerate() {
            for (j, cols) in subsets.iter().enumerate() {
                *out.get_mut(i, j) = self.minor(rows, cols)?;
            }
        }
        Ok(out)
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rat> {
        let k = rows.len();
        let mut sub = RatMatrix::zeros(k, k);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                *sub.get_mut(i, j) = self.get(r, c).clone();
            }
        }
        sub.det()
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    /// Entries as `BigInt`s, if all are integers.
    pub fn to_int_entries(&self) -> Option<Vec<BigInt>> {
        if self.is_integer() {
            Some(self.entries.iter().map(|e| e.numer().clone()).collect())
        } else {
            None
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(rat_to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Reduced row echelon form; returns the echelon rows (zero rows dropped)
/// and the pivot column of each row, in increasing order.
pub fn rref(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut work: Vec<Vec<Rat>> = rows.to_vec();
    let width = work.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..width {
        let pivot_row = (rank..work.len()).find(|&r| !work[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        work.swap(rank, pr);
        let inv = work[rank][col].recip();
        for c in col..width {
            work[rank][c] = &work[rank][c] * &inv;
        }
        for r in 0..work.len() {
            if r == rank || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in col..width {
                work[r][c] = &work[r][c] - &factor * &work[rank][c];
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    work.truncate(rank);
    (work, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;
    use crate::rat::rat_int;

    #[test]
    fn char_poly_cat_map() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.char_poly().unwrap(), RatPoly::from_ints(&[1, -3, 1]));
    }

    #[test]
    fn char_poly_identity() {
        let m = RatMatrix::identity(2);
        assert_eq!(m.char_poly().unwrap(), RatPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_quartic_unit_companion() {
        let m = RatMatrix::from_int_rows(&[
            &[0, 0, 0, -1],
            &[1, 0, 0, 2],
            &[0, 1, 0, 0],
            &[0, 0, 1, 2],
        ]);
        assert_eq!(
            m.char_poly().unwrap(),
            RatPoly::from_ints(&[1, -2, 0, -2, 1])
        );
    }

    /// Cofactor-expansion determinant, the independent oracle for `det`
    /// and for `char_poly` evaluated at 0.
    fn cofactor_det(m: &RatMatrix) -> Rat {
        let n = m.rows();
        if n == 0 {
            return Rat::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let mut sub = RatMatrix::zeros(n - 1, n - 1);
            for r in 1..n {
                let mut cc = 0;
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    *sub.get_mut(r - 1, cc) = m.get(r, c).clone();
                    cc += 1;
                }
            }
            let term = m.get(0, j) * &cofactor_det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn char_poly_at_zero_is_signed_det() {
        let mut state = 0x12345u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for n in 1..=5usize {
            for _ in 0..6 {
                let entries: Vec<Rat> = (0..n * n).map(|_| rat_int(next())).collect();
                let m = RatMatrix::new(n, n, entries).unwrap();
                let p = m.char_poly().unwrap();
                let oracle = cofactor_det(&m);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(p.coeff(0), oracle.clone() * rat_int(sign), "n={n}");
                assert_eq!(m.det().unwrap(), oracle);
            }
        }
    }

    #[test]
    fn char_poly_of_block_triangular_splits() {
        // [[A, 0], [C, B]] has char poly = charA * charB, over random blocks
        let mut state = 0xb10cu64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 9) as i64 - 4
        };
        for _ in 0..12 {
            let na = 1 + (next().unsigned_abs() as usize) % 3;
            let nb = 1 + (next().unsigned_abs() as usize) % 3;
            let n = na + nb;
            let mut a = RatMatrix::zeros(na, na);
            let mut b = RatMatrix::zeros(nb, nb);
            let mut m = RatMatrix::zeros(n, n);
            for r in 0..na {
                for c in 0..na {
                    let v = rat_int(next());
                    *a.get_mut(r, c) = v.clone();
                    *m.get_mut(r, c) = v;
                }
            }
            for r in 0..nb {
                for c in 0..nb {
                    let v = rat_int(next());
                    *b.get_mut(r, c) = v.clone();
                    *m.get_mut(na + r, na + c) = v;
                }
            }
            for r in 0..nb {
                for c in 0..na {
                    *m.get_mut(na + r, c) = rat_int(next());
                }
            }
            let expect = &a.char_poly().unwrap() * &b.char_poly().unwrap();
            assert_eq!(m.char_poly().unwrap(), expect);
        }
    }

    #[test]
    fn exterior_power_examples() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.exterior_power(1).unwrap(), m);
        let top = m.exterior_power(2).unwrap();
        assert_eq!(top.rows(), 1);
        assert_eq!(*top.get(0, 0), rat_int(1));

        let d = RatMatrix::from_int_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let d2 = d.exterior_power(2).unwrap();
        // lexicographic pairs: {0,1}, {0,2}, {1,2}
        assert_eq!(*d2.get(0, 0), rat_int(6));
        assert_eq!(*d2.get(1, 1), rat_int(10));
        assert_eq!(*d2.get(2, 2), rat_int(15));
        let d0 = d.exterior_power(0).unwrap();
        assert_eq!(*d0.get(0, 0), rat_int(1));
        assert!(d.exterior_power(4).is_err());
    }

    #[test]
    fn exterior_square_roots_are_pairwise_products() {
        // on a diagonal matrix the spectrum statement is exact
        let d = RatMatrix::from_int_rows(&[&[2, 0, 0], &[0, -1, 0], &[0, 0, 7]]);
        let p = d.exterior_power(2).unwrap().char_poly().unwrap();
        // roots should be {-2, 14, -7}
        for root in [-2i64, 14, -7] {
            assert!(p.eval(&rat_int(root)).is_zero(), "missing root {root}");
        }
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn inverse_round_trips() {
        let m = RatMatrix::from_int_rows(&[&[2, 1, 0], &[1, 1, 0], &[3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(3));
        let singular = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(singular.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn k_subsets_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn rref_finds_pivots() {
        let rows = vec![
            vec![rat_int(0), rat_int(2), rat_int(4)],
            vec![rat_int(0), rat_int(1), rat_int(2)],
            vec![rat_int(1), rat_int(1), rat_int(1)],
        ];
        let (ech, pivots) = rref(&rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(ech.len(), 2);
    }
}
