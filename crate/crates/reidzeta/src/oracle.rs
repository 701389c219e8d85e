//! Brute-force twisted-conjugacy counting, used as an independent check
//! on everything the exact pipeline computes.
//!
//! Twisted conjugacy: `x ~ y` iff `x = z y phi(z)^-1` for some `z`. On a
//! finite group the classes are enumerated literally by union-find over
//! the moves `x -> z x phi(z)^-1`. On `Z^n` with `phi = A`, the classes
//! biject with the cokernel of `I - A`, counted through the Smith normal
//! form.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, IntMatrix};

/// Finite group as a Cayley table: `table[a][b]` is the index of `a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

/// Guard against quadratic-table blowup on hostile inputs.
pub const MAX_GROUP_ORDER: usize = 512;

impl FiniteGroup {
    /// Validates bounds, the identity, inverses, and full associativity.
    pub fn new(identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::invalid("empty Cayley table"));
        }
        if order > MAX_GROUP_ORDER {
            return Err(Error::invalid(format!(
                "group order {order} exceeds the supported maximum {MAX_GROUP_ORDER}"
            )));
        }
        if identity >= order {
            return Err(Error::invalid("identity index out of range"));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::invalid(format!(
                    "Cayley row {a} has length {}, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= order) {
                return Err(Error::invalid(format!(
                    "Cayley entry {bad} out of range in row {a}"
                )));
            }
        }
        for x in 0..order {
            if table[identity][x] != x || table[x][identity] != x {
                return Err(Error::invalid(format!(
                    "element {identity} is not a two-sided identity at {x}"
                )));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::invalid(format!("element {x} has no inverse")))?;
            inverses[x] = inv;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::invalid(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            identity,
            table,
            inverses,
        })
    }

    /// Cyclic group `Z/m` with elements `0..m` under addition.
    pub fn cyclic(m: usize) -> FiniteGroup {
        let table = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        FiniteGroup::new(0, table).expect("cyclic table is a group")
    }

    /// Product of cyclic groups `Z/m1 x Z/m2 x ...`, elements in mixed
    /// radix order.
    pub fn cyclic_product(moduli: &[usize]) -> Result<FiniteGroup> {
        if moduli.contains(&0) {
            return Err(Error::invalid("zero modulus in cyclic product"));
        }
        let order: usize = moduli.iter().product();
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(Error::invalid("cyclic product order out of range"));
        }
        let decode = |mut x: usize| -> Vec<usize> {
            moduli
                .iter()
                .map(|&m| {
                    let r = x % m;
                    x /= m;
                    r
                })
                .collect()
        };
        let encode = |parts: &[usize]| -> usize {
            moduli
                .iter()
                .zip(parts)
                .rev()
                .fold(0usize, |acc, (&m, &p)| acc * m + p)
        };
        let table: Vec<Vec<usize>> = (0..order)
            .map(|a| {
                let da = decode(a);
                (0..order)
                    .map(|b| {
                        let db = decode(b);
                        let sum: Vec<usize> = da
                            .iter()
                            .zip(&db)
                            .zip(moduli)
                            .map(|((&x, &y), &m)| (x + y) % m)
                            .collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(0, table)
    }

    /// Dihedral group of order `2n`: elements `0..n` are rotations,
    /// `n..2n` reflections. `dihedral(3)` is S3.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let order = 2 * n;
        let mut table = vec![vec![0usize; order]; order];
        for i in 0..order {
            for j in 0..order {
                let (ri, fi) = (i % n, i >= n);
                let (rj, fj) = (j % n, j >= n);
                // r^a f^e * r^b f^d with f r = r^-1 f
                let rot = if fi {
                    (ri + n - rj % n) % n
                } else {
                    (ri + rj) % n
                };
                let flip = fi ^ fj;
                table[i][j] = rot + if flip { n } else { 0 };
            }
        }
        FiniteGroup::new(0, table).expect("dihedral table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// Endomorphism of a finite group by its image vector.
#[derive(Clone, Debug)]
pub struct FiniteEndo<'g> {
    group: &'g FiniteGroup,
    images: Vec<usize>,
}

impl<'g> FiniteEndo<'g> {
    /// Verifies the homomorphism property on all pairs.
    pub fn new(group: &'g FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if images.len() != n {
            return Err(Error::invalid(format!(
                "endomorphism needs {n} images, got {}",
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&v| v >= n) {
            return Err(Error::invalid(format!("image {bad} out of range")));
        }
        for a in 0..n {
            for b in 0..n {
                if images[group.mul(a, b)] != group.mul(images[a], images[b]) {
                    return Err(Error::invalid(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(FiniteEndo { group, images })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn class_count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}

/// Number of twisted conjugacy classes `x ~ z x phi(z)^-1` by union-find.
pub fn twisted_classes_finite(group: &FiniteGroup, endo: &FiniteEndo<'_>) -> usize {
    let n = group.order();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for z in 0..n {
            let moved = group.mul(group.mul(z, x), group.inverse(endo.apply(z)));
            uf.union(x, moved);
        }
    }
    uf.class_count()
}

/// Reidemeister count of `x -> Ax` on the lattice `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeCount {
    Infinite,
    Finite(BigInt),
}

impl std::fmt::Display for LatticeCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeCount::Infinite => f.write_str("INFINITE"),
            LatticeCount::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Index `[Z^n : (I - A) Z^n]` through the Smith normal form: infinite
/// when `det(I - A) = 0`, else the product of the invariant factors. The
/// twisted classes of `x -> Ax` biject with the cokernel of `I - A`.
pub fn twisted_count_lattice(a: &IntMatrix) -> Result<LatticeCount> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let delta = IntMatrix::identity(a.rows()).sub(a)?;
    let snf = smith_normal_form(&delta);
    if snf.rank < a.rows() {
        return Ok(LatticeCount::Infinite);
    }
    Ok(LatticeCount::Finite(snf.invariant_product()))
}

/// Invariant factors of the cokernel of `I - A` (nontrivial ones), for
/// building the finite quotient model.
pub fn cokernel_invariants(a: &IntMatrix) -> Result<Option<Vec<BigInt>>> {
    let delta = IntMatrix::identity(a.rows()).sub(a)?;
    let snf = smith_normal_form(&delta);
    if snf.rank < a.rows() {
        return Ok(None);
    }
    Ok(Some(
        snf.diagonal
            .iter()
            .filter(|d| !d.is_zero() && **d != BigInt::from(1))
            .cloned()
            .collect(),
    ))
}

/// Stable image `H = phi^m(G)` and the restriction of `phi` to it; the
/// twisted class count must match the full count.
///
/// `H` satisfies the two reduction hypotheses: it is `phi`-invariant and
/// every element lands in it under some iterate of `phi`.
pub fn check_subgroup_reduction(
    group: &FiniteGroup,
    endo: &FiniteEndo<'_>,
) -> Result<(usize, usize)> {
    let n = group.order();
    let mut current: Vec<bool> = vec![true; n];
    loop {
        let mut next = vec![false; n];
        for x in 0..n {
            if current[x] {
                next[endo.apply(x)] = true;
            }
        }
        if next == current {
            break;
        }
        current = next;
    }
    let members: Vec<usize> = (0..n).filter(|&x| current[x]).collect();
    let index_of = |x: usize| members.binary_search(&x).expect("member");
    let sub_identity = index_of(group.identity());
    let sub_table: Vec<Vec<usize>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| index_of(group.mul(a, b))).collect())
        .collect();
    let subgroup = FiniteGroup::new(sub_identity, sub_table)
        .map_err(|e| Error::internal(format!("stable image is not a subgroup: {e}")))?;
    let sub_images: Vec<usize> = members.iter().map(|&x| index_of(endo.apply(x))).collect();
    let sub_endo = FiniteEndo::new(&subgroup, sub_images)
        .map_err(|e| Error::internal(format!("restriction is not an endomorphism: {e}")))?;

    let full = twisted_classes_finite(group, endo);
    let reduced = twisted_classes_finite(&subgroup, &sub_endo);
    if full != reduced {
        return Err(Error::SubgroupReductionMismatch { full, reduced });
    }
    Ok((full, reduced))
}

/// Eventual kernel `N = union of ker(phi^m)` and the induced endomorphism
/// on `G / N`; the twisted class count must match the full count.
pub fn check_quotient_reduction(
    group: &FiniteGroup,
    endo: &FiniteEndo<'_>,
) -> Result<(usize, usize)> {
    let n = group.order();
    let e = group.identity();
    // iterate phi until the kernel stabilizes
    let mut composed: Vec<usize> = (0..n).collect();
    let mut kernel: Vec<bool> = vec![false; n];
    kernel[e] = true;
    loop {
        composed = (0..n).map(|x| endo.apply(composed[x])).collect();
        let next: Vec<bool> = (0..n).map(|x| composed[x] == e).collect();
        if next == kernel {
            break;
        }
        kernel = next;
    }
    // normality of the eventual kernel
    for g in 0..n {
        for x in 0..n {
            if kernel[x] {
                let conj = group.mul(group.mul(g, x), group.inverse(g));
                if !kernel[conj] {
                    return Err(Error::internal("eventual kernel is not normal"));
                }
            }
        }
    }
    // cosets of N by canonical least member
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        for k in 0..n {
            if kernel[k] {
                coset_of[group.mul(x, k)] = id;
            }
        }
        reps.push(x);
    }
    let q = reps.len();
    let qtable: Vec<Vec<usize>> = (0..q)
        .map(|a| {
            (0..q)
                .map(|b| coset_of[group.mul(reps[a], reps[b])])
                .collect()
        })
        .collect();
    let quotient = FiniteGroup::new(coset_of[e], qtable)
        .map_err(|err| Error::internal(format!("quotient is not a group: {err}")))?;
    let qimages: Vec<usize> = (0..q).map(|a| coset_of[endo.apply(reps[a])]).collect();
    let qendo = FiniteEndo::new(&quotient, qimages)
        .map_err(|err| Error::internal(format!("induced map is not an endomorphism: {err}")))?;

    let full = twisted_classes_finite(group, endo);
    let reduced = twisted_classes_finite(&quotient, &qendo);
    if full != reduced {
        return Err(Error::QuotientReductionMismatch { full, reduced });
    }
    Ok((full, reduced))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaling_endo(group: &FiniteGroup, factor: usize) -> FiniteEndo<'_> {
        let images = (0..group.order())
            .map(|x| {
                let mut acc = group.identity();
                for _ in 0..factor {
                    acc = group.mul(acc, x);
                }
                acc
            })
            .collect();
        FiniteEndo::new(group, images).unwrap()
    }

    #[test]
    fn doubling_on_z8_gives_one_class() {
        let g = FiniteGroup::cyclic(8);
        let e = scaling_endo(&g, 2);
        assert_eq!(twisted_classes_finite(&g, &e), 1);
    }

    #[test]
    fn identity_on_z5_gives_five_classes() {
        let g = FiniteGroup::cyclic(5);
        let e = scaling_endo(&g, 1);
        assert_eq!(twisted_classes_finite(&g, &e), 5);
    }

    #[test]
    fn identity_on_s3_gives_conjugacy_classes() {
        let s3 = FiniteGroup::dihedral(3);
        assert_eq!(s3.order(), 6);
        let images = (0..6).collect();
        let e = FiniteEndo::new(&s3, images).unwrap();
        assert_eq!(twisted_classes_finite(&s3, &e), 3);
    }

    #[test]
    fn lattice_cat_map() {
        let a = IntMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(
            twisted_count_lattice(&a).unwrap(),
            LatticeCount::Finite(BigInt::from(1))
        );
        let a2 = IntMatrix::from_int_rows(&[&[5, 3], &[3, 2]]);
        assert_eq!(
            twisted_count_lattice(&a2).unwrap(),
            LatticeCount::Finite(BigInt::from(5))
        );
    }

    #[test]
    fn lattice_with_eigenvalue_one_is_infinite() {
        let swap = IntMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            twisted_count_lattice(&swap).unwrap(),
            LatticeCount::Infinite
        );
    }

    #[test]
    fn subgroup_reduction_examples() {
        let g = FiniteGroup::cyclic(8);
        let e = scaling_endo(&g, 2);
        // stable image is {0}, both counts 1
        assert_eq!(check_subgroup_reduction(&g, &e).unwrap(), (1, 1));

        let g = FiniteGroup::cyclic(6);
        let e = scaling_endo(&g, 4);
        // stable image is {0, 2, 4}
        check_subgroup_reduction(&g, &e).unwrap();

        let s3 = FiniteGroup::dihedral(3);
        let id = FiniteEndo::new(&s3, (0..6).collect()).unwrap();
        assert_eq!(check_subgroup_reduction(&s3, &id).unwrap(), (3, 3));
    }

    #[test]
    fn quotient_reduction_examples() {
        let g = FiniteGroup::cyclic(8);
        let e = scaling_endo(&g, 2);
        // eventual kernel is everything, quotient trivial
        assert_eq!(check_quotient_reduction(&g, &e).unwrap(), (1, 1));

        let g = FiniteGroup::cyclic(12);
        let e = scaling_endo(&g, 3);
        check_quotient_reduction(&g, &e).unwrap();

        // injective: kernel trivial
        let g = FiniteGroup::cyclic(5);
        let e = scaling_endo(&g, 2);
        check_quotient_reduction(&g, &e).unwrap();
    }

    #[test]
    fn exhaustive_reductions_on_cyclic_groups() {
        for m in 1..=16usize {
            let g = FiniteGroup::cyclic(m);
            for factor in 0..m {
                let e = scaling_endo(&g, factor);
                check_subgroup_reduction(&g, &e).unwrap();
                check_quotient_reduction(&g, &e).unwrap();
            }
        }
    }

    #[test]
    fn rejects_non_groups() {
        // constant table is not a group
        let bad = vec![vec![0, 0], vec![0, 0]];
        assert!(FiniteGroup::new(0, bad).is_err());
        // broken associativity / latin square
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::new(0, bad).is_err());
        // ragged
        let bad = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroup::new(0, bad).is_err());
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let g = FiniteGroup::cyclic(4);
        assert!(FiniteEndo::new(&g, vec![0, 1, 2, 0]).is_err());
        assert!(FiniteEndo::new(&g, vec![0, 1]).is_err());
        assert!(FiniteEndo::new(&g, vec![0, 9, 2, 3]).is_err());
    }

    #[test]
    fn cyclic_product_builds() {
        let g = FiniteGroup::cyclic_product(&[2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        let e = FiniteEndo::new(&g, (0..6).collect()).unwrap();
        assert_eq!(twisted_classes_finite(&g, &e), 6);
    }

    #[test]
    fn dihedral_4_identity_classes() {
        // D4 has 5 conjugacy classes
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.order(), 8);
        let id = FiniteEndo::new(&d4, (0..8).collect()).unwrap();
        assert_eq!(twisted_classes_finite(&d4, &id), 5);
    }
}
