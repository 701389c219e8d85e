//! Free nilpotent Lie algebras on a Hall basis.
//!
//! Basis elements are Hall trees ordered by degree then creation order:
//! generators first, and a bracket `[u, v]` is kept when `u < v` and, if
//! `v = [v1, v2]`, additionally `v1 <= u`. Structure constants are obtained
//! by expanding each Hall tree in the free associative algebra (bracket =
//! commutator of noncommutative polynomials) and solving, degree by degree,
//! for the coordinates of pair brackets in the span of the basis
//! expansions. The solver doubles as a proof that the generated elements
//! are linearly independent and span every homogeneous layer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::FamilyTag;
use crate::nilpotent::NilAlgebra;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HallNode {
    /// Generator index `0..k`.
    Generator(usize),
    /// Bracket of two earlier elements, by index into the element list.
    Bracket(usize, usize),
}

#[derive(Clone, Debug)]
pub struct HallElement {
    pub degree: usize,
    pub node: HallNode,
    pub name: String,
}

/// The ordered Hall basis of the free `c`-step nilpotent Lie algebra on
/// `k` generators.
#[derive(Clone, Debug)]
pub struct HallBasis {
    pub k: usize,
    pub c: usize,
    /// Sorted by degree, then creation order; index = basis index.
    pub elements: Vec<HallElement>,
    /// Number of elements of each degree `1..=c`.
    pub degree_dims: Vec<usize>,
}

/// A free nilpotent algebra together with the Hall basis that built it.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    pub algebra: NilAlgebra,
    pub basis: HallBasis,
}

/// Words in the free associative algebra, as generator indices.
type Word = Vec<usize>;
/// Integer noncommutative polynomial, word -> coefficient.
type NcPoly = BTreeMap<Word, BigInt>;

fn nc_mul(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            let entry = out.entry(w).or_insert_with(BigInt::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                // cleanup happens lazily below
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn nc_commutator(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let ab = nc_mul(a, b);
    let ba = nc_mul(b, a);
    let mut out = ab;
    for (w, c) in ba {
        let entry = out.entry(w).or_insert_with(BigInt::zero);
        *entry -= c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expresses homogeneous Lie elements in the span of the degree's basis
/// expansions, by reduced echelon rows with the forming combination
/// tracked alongside.
struct DegreeSolver {
    word_index: BTreeMap<Word, usize>,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Rat>>,
}

impl DegreeSolver {
    fn build(expansions: &[&NcPoly]) -> Result<DegreeSolver> {
        let mut word_index = BTreeMap::new();
        for exp in expansions {
            for w in exp.keys() {
                let next = word_index.len();
                word_index.entry(w.clone()).or_insert(next);
            }
        }
        let width = word_index.len();
        let count = expansions.len();
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(count);
        let mut combos: Vec<Vec<Rat>> = Vec::with_capacity(count);
        for (i, exp) in expansions.iter().enumerate() {
            let mut row = vec![Rat::zero(); width];
            for (w, c) in exp.iter() {
                row[word_index[w]] = Rat::from_integer(c.clone());
            }
            rows.push(row);
            let mut combo = vec![Rat::zero(); count];
            combo[i] = Rat::from_integer(1.into());
            combos.push(combo);
        }
        // Gauss-Jordan with the combination block carried along
        let mut pivots = Vec::with_capacity(count);
        let mut rank = 0usize;
        for col in 0..width {
            let Some(pr) = (rank..count).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pr);
            combos.swap(rank, pr);
            let inv = rows[rank][col].recip();
            for v in rows[rank].iter_mut() {
                *v = &*v * &inv;
            }
            for v in combos[rank].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..count {
                if r == rank || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
                for c in 0..count {
                    let delta = &factor * &combos[rank][c];
                    combos[r][c] = &combos[r][c] - &delta;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == count {
                break;
            }
        }
        if rank != count {
            return Err(Error::internal(
                "Hall basis expansions are linearly dependent",
            ));
        }
        Ok(DegreeSolver {
            word_index,
            rows,
            pivots,
            combos,
        })
    }

    fn express(&self, target: &NcPoly) -> Result<Vec<Rat>> {
        let width = self.word_index.len();
        let count = self.combos.first().map_or(0, |c| c.len());
        let mut dense = vec![Rat::zero(); width];
        for (w, c) in target {
            let idx = self
                .word_index
                .get(w)
                .ok_or_else(|| Error::internal("bracket expansion leaves the Hall span"))?;
            dense[*idx] = Rat::from_integer(c.clone());
        }
        let mut coords = vec![Rat::zero(); count];
        for (r, &pivot) in self.pivots.iter().enumerate() {
            let factor = dense[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..width {
                let delta = &factor * &self.rows[r][c];
                dense[c] = &dense[c] - &delta;
            }
            for c in 0..count {
                let delta = &factor * &self.combos[r][c];
                coords[c] = &coords[c] + &delta;
            }
        }
        if dense.iter().any(|v| !v.is_zero()) {
            return Err(Error::internal("bracket expansion leaves the Hall span"));
        }
        Ok(coords)
    }
}

fn generate_elements(k: usize, c: usize, cap: usize) -> Result<Vec<HallElement>> {
    let mut elements: Vec<HallElement> = (0..k)
        .map(|g| HallElement {
            degree: 1,
            node: HallNode::Generator(g),
            name: format!("x{}", g + 1),
        })
        .collect();
    if elements.len() > cap {
        return Err(Error::ScaleCap {
            dim: elements.len(),
            cap,
        });
    }
    for m in 2..=c {
        let snapshot = elements.len();
        for u in 0..snapshot {
            for v in u + 1..snapshot {
                if elements[u].degree + elements[v].degree != m {
                    continue;
                }
                if let HallNode::Bracket(v1, _) = elements[v].node {
                    if v1 > u {
                        continue;
                    }
                }
                let name = format!("[{},{}]", elements[u].name, elements[v].name);
                elements.push(HallElement {
                    degree: m,
                    node: HallNode::Bracket(u, v),
                    name,
                });
                if elements.len() > cap {
                    return Err(Error::ScaleCap {
                        dim: elements.len(),
                        cap,
                    });
                }
            }
        }
    }
    Ok(elements)
}

/// Builds the free `c`-step nilpotent Lie algebra on `k` generators, with
/// structure constants over the Hall basis. Dimension is capped by `cap`.
pub fn free_nilpotent(k: usize, c: usize, cap: usize) -> Result<FreeNilpotent> {
    if k < 1 || c < 1 {
        return Err(Error::invalid(
            "free nilpotent algebra needs k >= 1 generators and class c >= 1",
        ));
    }
    let elements = generate_elements(k, c, cap)?;
    let dim = elements.len();
    let mut degree_dims = vec![0usize; c];
    for e in &elements {
        degree_dims[e.degree - 1] += 1;
    }

    // tensor-algebra expansions, in element order
    let mut expansions: Vec<NcPoly> = Vec::with_capacity(dim);
    for e in &elements {
        let exp = match e.node {
            HallNode::Generator(g) => {
                let mut p = NcPoly::new();
                p.insert(vec![g], BigInt::from(1));
                p
            }
            HallNode::Bracket(l, r) => nc_commutator(&expansions[l], &expansions[r]),
        };
        expansions.push(exp);
    }

    // one solver per degree that can receive brackets
    let mut offsets: Vec<Vec<usize>> = vec![Vec::new(); c + 1];
    for (i, e) in elements.iter().enumerate() {
        offsets[e.degree].push(i);
    }
    let mut solvers: Vec<Option<DegreeSolver>> = (0..=c).map(|_| None).collect();
    for m in 2..=c {
        if offsets[m].is_empty() {
            continue;
        }
        let exps: Vec<&NcPoly> = offsets[m].iter().map(|&i| &expansions[i]).collect();
        solvers[m] = Some(DegreeSolver::build(&exps)?);
    }

    let mut brackets: BTreeMap<(usize, usize), Vec<Rat>> = BTreeMap::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let m = elements[i].degree + elements[j].degree;
            if m > c {
                continue;
            }
            let target = nc_commutator(&expansions[i], &expansions[j]);
            if target.is_empty() {
                continue;
            }
            let solver = solvers[m]
                .as_ref()
                .ok_or_else(|| Error::internal("missing solver for populated degree"))?;
            let coords = solver.express(&target)?;
            let mut full = vec![Rat::zero(); dim];
            for (slot, &idx) in offsets[m].iter().enumerate() {
                full[idx] = coords[slot].clone();
            }
            brackets.insert((i, j), full);
        }
    }

    let names: Vec<String> = elements.iter().map(|e| e.name.clone()).collect();
    let algebra = NilAlgebra::new(dim, Some(names), brackets, FamilyTag::Free { k, c })?;
    Ok(FreeNilpotent {
        algebra,
        basis: HallBasis {
            k,
            c,
            elements,
            degree_dims,
        },
    })
}
