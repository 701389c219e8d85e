//! Rational nilpotent Lie algebras by structure constants, their
//! automorphisms, graded data along the lower central series, and
//! Reidemeister numbers.
//!
//! The algebra stands in for the Lie algebra of the rational Mal'cev
//! completion of a finitely generated torsion-free nilpotent group; an
//! automorphism is a bracket-preserving invertible matrix on its basis
//! (column convention: basis vector `e_i` maps to column `i`).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::families::FamilyTag;
use crate::matrix::{rref, RatMatrix};
use crate::poly::RatPoly;
use crate::rat::Rat;

/// Lie algebra over Q given by structure constants on an ordered basis.
///
/// Only pairs `i < j` are stored; `[e_j, e_i] = -[e_i, e_j]` and
/// `[e_i, e_i] = 0` are implicit. Indices are 0-based internally, 1-based
/// on every user-facing surface.
#[derive(Clone, PartialEq)]
pub struct NilAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rat>>,
    metadata: FamilyTag,
}

impl NilAlgebra {
    /// Shape-checks indices and coefficient vectors; Jacobi and nilpotency
    /// are the job of [`NilAlgebra::validate`].
    pub fn new(
        dim: usize,
        basis_names: Option<Vec<String>>,
        brackets: BTreeMap<(usize, usize), Vec<Rat>>,
        metadata: FamilyTag,
    ) -> Result<Self> {
        let basis_names =
            basis_names.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
        if basis_names.len() != dim {
            return Err(Error::invalid(format!(
                "expected {dim} basis names, got {}",
                basis_names.len()
            )));
        }
        for (&(i, j), coeffs) in &brackets {
            if i >= j || j >= dim {
                return Err(Error::invalid(format!(
                    "bracket key ({}, {}) out of order or range for dim {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::invalid(format!(
                    "bracket ({}, {}) has {} coefficients, expected {dim}",
                    i + 1,
                    j + 1,
                    coeffs.len()
                )));
            }
        }
        let brackets = brackets
            .into_iter()
            .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
            .collect();
        Ok(NilAlgebra {
            dim,
            basis_names,
            brackets,
            metadata,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rat>> {
        &self.brackets
    }

    pub fn metadata(&self) -> &FamilyTag {
        &self.metadata
    }

    pub fn set_metadata(&mut self, tag: FamilyTag) {
        self.metadata = tag;
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        if i == j {
            return vec![Rat::zero(); self.dim];
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.brackets.get(&(a, b)) {
            None => vec![Rat::zero(); self.dim],
            Some(v) if flip => v.iter().map(|c| -c).collect(),
            Some(v) => v.clone(),
        }
    }

    /// Bilinear extension of the bracket to coefficient vectors; both
    /// slices must have length `dim`.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (&(i, j), table) in &self.brackets {
            // contribution of x_i y_j - x_j y_i on the stored pair (i, j)
            let coef = &x[i] * &y[j] - &x[j] * &y[i];
            if coef.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(table) {
                *o = &*o + &coef * t;
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple and that the lower
    /// central series reaches zero.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..self.dim {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let mut jac = self.bracket(&bij, &basis_vec(self.dim, k));
                    let t2 = self.bracket(&bjk, &basis_vec(self.dim, i));
                    let t3 = self.bracket(&bki, &basis_vec(self.dim, j));
                    for ((a, b), c) in jac.iter_mut().zip(&t2).zip(&t3) {
                        *a = &*a + b + c;
                    }
                    if jac.iter().any(|c| !c.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        self.lower_central_series().map(|_| ())
    }

    /// `gamma_1 = L`, `gamma_{i+1} = [L, gamma_i]` as reduced row-echelon
    /// bases, strictly decreasing to the zero space.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let prev = series.last().expect("nonempty");
            if prev.dim() == 0 {
                break;
            }
            let mut generated: Vec<Vec<Rat>> = Vec::new();
            for a in 0..self.dim {
                let ea = basis_vec(self.dim, a);
                for row in &prev.rows {
                    let b = self.bracket(&ea, row);
                    if b.iter().any(|c| !c.is_zero()) {
                        generated.push(b);
                    }
                }
            }
            let next = Subspace::span(&generated);
            if next.dim() >= prev.dim() {
                return Err(Error::NotNilpotent(next.dim()));
            }
            series.push(next);
        }
        Ok(series)
    }

    /// Dimensions along the lower central series, ending at 0.
    pub fn lcs_dims(&self) -> Result<Vec<usize>> {
        Ok(self
            .lower_central_series()?
            .iter()
            .map(|s| s.dim())
            .collect())
    }

    /// Length of the lower central series minus one.
    pub fn nilpotency_class(&self) -> Result<usize> {
        Ok(self.lower_central_series()?.len() - 1)
    }
}

impl fmt::Debug for NilAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "NilAlgebra(dim {}, {} brackets, {:?})",
            self.dim,
            self.brackets.len(),
            self.metadata
        )
    }
}

fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// Subspace of Q^n as reduced row-echelon rows with pivot bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn full(dim: usize) -> Self {
        Subspace {
            rows: (0..dim).map(|i| basis_vec(dim, i)).collect(),
            pivots: (0..dim).collect(),
        }
    }

    pub fn span(vectors: &[Vec<Rat>]) -> Self {
        let (rows, pivots) = rref(vectors);
        Subspace { rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// A validated automorphism: invertible and bracket-preserving.
#[derive(Clone, Debug)]
pub struct Automorphism<'a> {
    algebra: &'a NilAlgebra,
    matrix: RatMatrix,
}

impl<'a> Automorphism<'a> {
    pub fn algebra(&self) -> &'a NilAlgebra {
        self.algebra
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// The inverse automorphism.
    pub fn inverse(&self) -> Result<Automorphism<'a>> {
        Ok(Automorphism {
            algebra: self.algebra,
            matrix: self.matrix.inverse()?,
        })
    }

    /// `phi^n` for `n >= 0`.
    pub fn power(&self, n: u64) -> Result<Automorphism<'a>> {
        Ok(Automorphism {
            algebra: self.algebra,
            matrix: self.matrix.pow(n)?,
        })
    }
}

/// Wraps `matrix` as an automorphism of `algebra` after verifying
/// invertibility and `M [e_i, e_j] = [M e_i, M e_j]` on all basis pairs.
pub fn check_automorphism<'a>(
    algebra: &'a NilAlgebra,
    matrix: RatMatrix,
) -> Result<Automorphism<'a>> {
    let n = matrix.require_square()?;
    if n != algebra.dim() {
        return Err(Error::Dimension(format!(
            "matrix is {n}x{n} but the algebra has dimension {}",
            algebra.dim()
        )));
    }
    if matrix.det()?.is_zero() {
        return Err(Error::Singular);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = matrix.mul_vec(&algebra.bracket_basis(i, j))?;
            let rhs = algebra.bracket(&matrix.column(i), &matrix.column(j));
            if lhs != rhs {
                return Err(Error::NotBracketPreserving { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(Automorphism { algebra, matrix })
}

/// Char polys of the induced maps on the graded quotients
/// `gamma_i / gamma_{i+1}`, plus the full char poly.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedData {
    /// Dimensions of `gamma_1 >= gamma_2 >= ...`, ending at 0.
    pub lcs_dims: Vec<usize>,
    /// One monic char poly per nonzero graded quotient.
    pub graded_polys: Vec<RatPoly>,
    /// Char poly of the automorphism itself; equals the product of the
    /// graded polys.
    pub full_poly: RatPoly,
}

impl GradedData {
    pub fn nilpotency_class(&self) -> usize {
        self.lcs_dims.len() - 1
    }
}

/// Conjugates into a basis adapted to the lower central series and reads
/// off the diagonal blocks.
///
/// The adapted basis concatenates, for each step, the echelon rows of
/// `gamma_i` whose pivots are not pivots of `gamma_{i+1}`; in that basis an
/// automorphism is block lower triangular because each `gamma_i` is
/// invariant.
pub fn graded_data(phi: &Automorphism<'_>) -> Result<GradedData> {
    let algebra = phi.algebra();
    let n = algebra.dim();
    let series = algebra.lower_central_series()?;
    let lcs_dims: Vec<usize> = series.iter().map(|s| s.dim()).collect();

    let mut adapted: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut block_sizes = Vec::new();
    for w in series.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let fresh: Vec<Vec<Rat>> = cur
            .rows
            .iter()
            .zip(&cur.pivots)
            .filter(|(_, p)| !next.pivots.contains(p))
            .map(|(row, _)| row.clone())
            .collect();
        block_sizes.push(fresh.len());
        adapted.extend(fresh);
    }
    if adapted.len() != n {
        return Err(Error::internal("adapted basis does not span"));
    }

    let mut p = RatMatrix::zeros(n, n);
    for (col, vec) in adapted.iter().enumerate() {
        for (row, val) in vec.iter().enumerate() {
            *p.get_mut(row, col) = val.clone();
        }
    }
    let conj = p.inverse()?.mul(&phi.matrix().mul(&p)?)?;

    // blocks above the diagonal must vanish: gamma_i is invariant
    let mut offsets = vec![0usize];
    for b in &block_sizes {
        offsets.push(offsets.last().unwrap() + b);
    }
    for (bi, &size_i) in block_sizes.iter().enumerate() {
        for r in offsets[bi]..offsets[bi] + size_i {
            for c in offsets[bi + 1]..n {
                if !conj.get(r, c).is_zero() {
                    return Err(Error::internal(
                        "automorphism does not preserve the lower central series",
                    ));
                }
            }
        }
    }

    let mut graded_polys = Vec::new();
    for (bi, &size) in block_sizes.iter().enumerate() {
        if size == 0 {
            continue;
        }
        let mut block = RatMatrix::zeros(size, size);
        for r in 0..size {
            for c in 0..size {
                *block.get_mut(r, c) = conj.get(offsets[bi] + r, offsets[bi] + c).clone();
            }
        }
        graded_polys.push(block.char_poly()?);
    }

    let full_poly = phi.matrix().char_poly()?;
    let product = graded_polys.iter().fold(RatPoly::one(), |acc, p| &acc * p);
    if product != full_poly {
        return Err(Error::internal(
            "graded char polys do not multiply to the full char poly",
        ));
    }
    Ok(GradedData {
        lcs_dims,
        graded_polys,
        full_poly,
    })
}

/// A Reidemeister number: a positive count or infinite.
#[derive(Clone, Debug, PartialEq)]
pub enum Reidemeister {
    Infinite,
    Finite(Rat),
}

impl Reidemeister {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Reidemeister::Infinite)
    }

    /// The value as an integer, when finite and integral.
    pub fn as_integer(&self) -> Option<num_bigint::BigInt> {
        match self {
            Reidemeister::Finite(r) if r.denom().is_one() => Some(r.numer().clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Reidemeister {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reidemeister::Infinite => f.write_str("INFINITE"),
            Reidemeister::Finite(r) => f.write_str(&crate::rat::rat_to_string(r)),
        }
    }
}

/// `R(phi) = |det(I - phi)|`, infinite exactly when 1 is an eigenvalue.
///
/// The value is a positive integer whenever the automorphism is
/// integer-like; callers flag the rational case.
pub fn reidemeister_number(phi: &Automorphism<'_>) -> Result<Reidemeister> {
    let n = phi.matrix().rows();
    let delta = RatMatrix::identity(n).sub(phi.matrix())?;
    let det = delta.det()?;
    if det.is_zero() {
        Ok(Reidemeister::Infinite)
    } else {
        Ok(Reidemeister::Finite(det.abs()))
    }
}

/// `R(phi^n)` for `n = 1..=count`.
pub fn reidemeister_sequence(phi: &Automorphism<'_>, count: u64) -> Result<Vec<Reidemeister>> {
    let n = phi.matrix().rows();
    let identity = RatMatrix::identity(n);
    let mut power = identity.clone();
    let mut out = Vec::with_capacity(count as usize);
    for _ in 1..=count {
        power = power.mul(phi.matrix())?;
        let det = identity.sub(&power)?.det()?;
        out.push(if det.is_zero() {
            Reidemeister::Infinite
        } else {
            Reidemeister::Finite(det.abs())
        });
    }
    Ok(out)
}
