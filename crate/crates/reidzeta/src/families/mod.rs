//! Constructors for the group families under study, as Lie algebras over
//! Q, together with the family-level tameness criteria:
//!
//! - free `c`-step nilpotent on `k` generators (Hall basis): tame
//!   automorphism exists iff `c < k` (and `k >= 2`);
//! - 2-step algebras of simple graphs: tame iff every coherent component
//!   is edgeless of size >= 2 or has size >= 3;
//! - direct sums: tame iff both summands are, provided neither completion
//!   has an abelian factor;
//! - abelian and Heisenberg base cases.

pub mod hall;
pub mod witness;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::nilpotent::{check_automorphism, Automorphism, NilAlgebra};
use crate::rat::Rat;

pub use hall::{free_nilpotent, FreeNilpotent, HallBasis, HallElement, HallNode};
pub use witness::{find_tame_witness, Witness};

/// Default cap on algebra dimension for the constructors; override through
/// the caller (the CLI wires `REIDZETA_SCALE_CAP`).
pub const DEFAULT_SCALE_CAP: usize = 200;

/// Family provenance tag carried in the NilAlgebra JSON. Graph edges here
/// are 1-based, mirroring the wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyTag {
    Abelian {
        n: usize,
    },
    Heisenberg,
    Free {
        k: usize,
        c: usize,
    },
    Graph {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    DirectSum {
        parts: Vec<FamilyTag>,
    },
    Custom,
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Edges as 0-based pairs in any order; loops are rejected, duplicates
    /// collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph needs at least one vertex"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "edge ({}, {}) out of range for {n} vertices",
                    a + 1,
                    b + 1
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    /// Parses the CLI shorthand `"1-2,2-3"` (1-based). An empty spec gives
    /// an edgeless graph, so `n` must be supplied for that case.
    pub fn from_edge_spec(spec: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_vertex = 0usize;
        let trimmed = spec.trim();
        if !trimmed.is_empty() {
            for part in trimmed.split(',') {
                let (a, b) = part
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::invalid(format!("malformed edge {part:?}")))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad vertex in edge {part:?}")))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad vertex in edge {part:?}")))?;
                if a == 0 || b == 0 {
                    return Err(Error::invalid("vertices are 1-based"));
                }
                max_vertex = max_vertex.max(a).max(b);
                edges.push((a - 1, b - 1));
            }
        }
        let n = match n {
            Some(n) => {
                if max_vertex > n {
                    return Err(Error::invalid(format!(
                        "edge mentions vertex {max_vertex} but n = {n}"
                    )));
                }
                n
            }
            None if max_vertex > 0 => max_vertex,
            None => {
                return Err(Error::invalid(
                    "empty edge spec needs an explicit vertex count",
                ))
            }
        };
        Graph::new(n, edges)
    }

    /// Graph from an edge bitmask over the lexicographic pair order; used
    /// by exhaustive sweeps. Pairs are (0,1), (0,2), ..., (n-2, n-1), so
    /// `n` may have at most 64 choose-2 pairs.
    pub fn from_bitmask(n: usize, mask: u64) -> Result<Self> {
        if n > 11 {
            return Err(Error::invalid(
                "bitmask graphs support at most 11 vertices (55 pair bits)",
            ));
        }
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn family_tag(&self) -> FamilyTag {
        FamilyTag::Graph {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ComponentKind {
    Edgeless,
    Complete,
}

/// One coherent component: vertices interchangeable by transpositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted 0-based vertices.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl Component {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Partition of the vertices into coherent components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentPartition {
    pub components: Vec<Component>,
}

impl CoherentPartition {
    /// Profile string like `C3+E2+E1`, sizes descending; `E`dgeless or
    /// `C`omplete (singletons count as edgeless).
    pub fn profile(&self) -> String {
        let mut parts: Vec<(usize, char)> = self
            .components
            .iter()
            .map(|c| {
                let tag = match c.kind {
                    ComponentKind::Edgeless => 'E',
                    ComponentKind::Complete => 'C',
                };
                (c.size(), tag)
            })
            .collect();
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        parts
            .iter()
            .map(|(size, tag)| format!("{tag}{size}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Whether swapping `v` and `w` maps the edge set to itself, i.e.
/// `N(v) \ {w} = N(w) \ {v}`.
fn transposition_is_automorphism(g: &Graph, v: usize, w: usize) -> bool {
    let mut nv = g.neighbors(v);
    nv.remove(&w);
    let mut nw = g.neighbors(w);
    nw.remove(&v);
    nv == nw
}

/// Partition under "the transposition is a graph automorphism".
///
/// The relation is an equivalence because graph automorphisms form a
/// group; this is re-verified and a failure is an internal error. Each
/// component's induced subgraph must come out edgeless or complete.
pub fn coherent_components(g: &Graph) -> Result<CoherentPartition> {
    let n = g.vertex_count();
    let mut related = vec![vec![false; n]; n];
    for v in 0..n {
        related[v][v] = true;
        for w in v + 1..n {
            let r = transposition_is_automorphism(g, v, w);
            related[v][w] = r;
            related[w][v] = r;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if related[a][b] && related[b][c] && !related[a][c] {
                    return Err(Error::internal(format!(
                        "coherence relation is not transitive on ({}, {}, {})",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let vertices: Vec<usize> = (v..n).filter(|&w| related[v][w]).collect();
        for &w in &vertices {
            seen[w] = true;
        }
        let inner_edges = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| vertices[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| g.has_edge(a, b))
            .count();
        let size = vertices.len();
        let all_pairs = size * (size - 1) / 2;
        let kind = if inner_edges == 0 {
            ComponentKind::Edgeless
        } else if inner_edges == all_pairs {
            ComponentKind::Complete
        } else {
            return Err(Error::internal(format!(
                "coherent component {:?} is neither edgeless nor complete",
                vertices.iter().map(|v| v + 1).collect::<Vec<_>>()
            )));
        };
        components.push(Component { vertices, kind });
    }
    Ok(CoherentPartition { components })
}

/// The 2-step algebra of a graph: one generator per vertex, one central
/// element per edge, `[v, w] = e_vw` for `v < w` adjacent.
pub fn graph_algebra(g: &Graph) -> NilAlgebra {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let dim = n + edges.len();
    let mut names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut brackets = BTreeMap::new();
    for (idx, &(a, b)) in edges.iter().enumerate() {
        names.push(format!("e{}_{}", a + 1, b + 1));
        let mut vec = vec![Rat::zero(); dim];
        vec[n + idx] = Rat::from_integer(1.into());
        brackets.insert((a, b), vec);
    }
    NilAlgebra::new(dim, Some(names), brackets, g.family_tag())
        .expect("graph algebra construction is shape-correct")
}

/// Per-component tameness verdicts and the conjunction.
#[derive(Clone, Debug)]
pub struct GraphTameness {
    pub partition: CoherentPartition,
    /// Verdict per component, aligned with `partition.components`.
    pub component_ok: Vec<bool>,
    pub tame: bool,
}

/// A component admits the required automorphisms when it is an edgeless
/// pair or larger, or any component of size >= 3. Singletons force a
/// rational line (only eigenvalues +-1) and block; so does an edge pair,
/// which is a Heisenberg factor.
pub fn graph_tameness(g: &Graph) -> Result<GraphTameness> {
    let partition = coherent_components(g)?;
    let component_ok: Vec<bool> = partition
        .components
        .iter()
        .map(|c| c.size() >= 3 || (c.size() == 2 && c.kind == ComponentKind::Edgeless))
        .collect();
    let tame = component_ok.iter().all(|&ok| ok);
    Ok(GraphTameness {
        partition,
        component_ok,
        tame,
    })
}

/// Free nilpotent criterion: `N_{k,c}` has a tame automorphism iff
/// `k >= 2` and `c < k`.
pub fn free_tameness(k: usize, c: usize) -> bool {
    k >= 2 && c < k
}

/// Abelian algebra of rank `n` (no brackets).
pub fn abelian(n: usize) -> NilAlgebra {
    NilAlgebra::new(n, None, BTreeMap::new(), FamilyTag::Abelian { n })
        .expect("abelian construction is shape-correct")
}

/// The 3-dimensional Heisenberg algebra `[e1, e2] = e3`; identical
/// structure constants to `free_nilpotent(2, 2)`.
pub fn heisenberg() -> NilAlgebra {
    let mut brackets = BTreeMap::new();
    brackets.insert(
        (0usize, 1usize),
        vec![Rat::zero(), Rat::zero(), Rat::from_integer(1.into())],
    );
    NilAlgebra::new(3, None, brackets, FamilyTag::Heisenberg)
        .expect("heisenberg construction is shape-correct")
}

/// Block direct sum of structure constants.
pub fn direct_sum(l1: &NilAlgebra, l2: &NilAlgebra) -> NilAlgebra {
    let d1 = l1.dim();
    let dim = d1 + l2.dim();
    let mut names: Vec<String> = l1.basis_names().iter().map(|n| format!("a.{n}")).collect();
    names.extend(l2.basis_names().iter().map(|n| format!("b.{n}")));
    let mut brackets: BTreeMap<(usize, usize), Vec<Rat>> = BTreeMap::new();
    for (&(i, j), v) in l1.brackets() {
        let mut vec = v.clone();
        vec.resize(dim, Rat::zero());
        brackets.insert((i, j), vec);
    }
    for (&(i, j), v) in l2.brackets() {
        let mut vec = vec![Rat::zero(); d1];
        vec.extend(v.iter().cloned());
        brackets.insert((i + d1, j + d1), vec);
    }
    let tag = FamilyTag::DirectSum {
        parts: vec![l1.metadata().clone(), l2.metadata().clone()],
    };
    NilAlgebra::new(dim, Some(names), brackets, tag)
        .expect("direct sum construction is shape-correct")
}

/// Whether the family tag certifies that the completion has no abelian
/// factor; required by the direct-sum tameness theorem. Certified:
/// free(k, c) with k >= 2 and c >= 2, Heisenberg, graph algebras whose
/// coherent components are all complete of size >= 2, and direct sums of
/// certified parts.
pub fn certifies_no_abelian_factor(tag: &FamilyTag) -> bool {
    match tag {
        FamilyTag::Free { k, c } => *k >= 2 && *c >= 2,
        FamilyTag::Heisenberg => true,
        FamilyTag::Graph { n, edges } => {
            let Ok(g) = Graph::new(
                *n,
                edges
                    .iter()
                    .filter(|&&(a, b)| a >= 1 && b >= 1)
                    .map(|&(a, b)| (a - 1, b - 1)),
            ) else {
                return false;
            };
            match coherent_components(&g) {
                Ok(partition) => partition
                    .components
                    .iter()
                    .all(|c| c.kind == ComponentKind::Complete && c.size() >= 2),
                Err(_) => false,
            }
        }
        FamilyTag::DirectSum { parts } => {
            !parts.is_empty() && parts.iter().all(certifies_no_abelian_factor)
        }
        FamilyTag::Abelian { .. } | FamilyTag::Custom => false,
    }
}

/// Tameness of a direct sum from the summands' verdicts. The caller must
/// assert that neither completion has an abelian factor (see
/// [`certifies_no_abelian_factor`]); without that hypothesis the theorem
/// does not apply and the combinator refuses.
pub fn direct_sum_tameness(t1: bool, t2: bool, no_abelian_factor: bool) -> Result<bool> {
    if !no_abelian_factor {
        return Err(Error::AbelianFactorUncertified);
    }
    Ok(t1 && t2)
}

/// The unique automorphism of the free algebra extending `m1` on the
/// degree-1 generators: images of Hall monomials are brackets of images.
pub fn extend_degree_one<'a>(free: &'a FreeNilpotent, m1: &RatMatrix) -> Result<Automorphism<'a>> {
    let k = free.basis.k;
    if m1.require_square()? != k {
        return Err(Error::Dimension(format!("degree-1 matrix must be {k}x{k}")));
    }
    if m1.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let algebra = &free.algebra;
    let dim = algebra.dim();
    let mut images: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    for element in &free.basis.elements {
        let img = match element.node {
            HallNode::Generator(gen) => {
                let mut v = vec![Rat::zero(); dim];
                for row in 0..k {
                    v[row] = m1.get(row, gen).clone();
                }
                v
            }
            HallNode::Bracket(left, right) => algebra.bracket(&images[left], &images[right]),
        };
        images.push(img);
    }
    let mut matrix = RatMatrix::zeros(dim, dim);
    for (col, img) in images.iter().enumerate() {
        for (row, val) in img.iter().enumerate() {
            *matrix.get_mut(row, col) = val.clone();
        }
    }
    check_automorphism(algebra, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::graded_data;
    use crate::poly::RatPoly;

    fn k(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn edgeless(n: usize) -> Graph {
        Graph::new(n, Vec::new()).unwrap()
    }

    #[test]
    fn bitmask_graphs() {
        let g = Graph::from_bitmask(3, 0b111).unwrap();
        assert_eq!(g.edge_count(), 3);
        let g = Graph::from_bitmask(3, 0).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(Graph::from_bitmask(12, 0).is_err());
    }

    #[test]
    fn edge_spec_parsing() {
        let g = Graph::from_edge_spec("1-2,2-3", None).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let g = Graph::from_edge_spec("", Some(2)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
        assert!(Graph::from_edge_spec("", None).is_err());
        assert!(Graph::from_edge_spec("1-1", None).is_err());
        assert!(Graph::from_edge_spec("0-1", None).is_err());
        assert!(Graph::from_edge_spec("1-2", Some(1)).is_err());
        assert!(Graph::from_edge_spec("x-2", None).is_err());
    }

    #[test]
    fn complete_graph_is_one_component() {
        let partition = coherent_components(&k(4)).unwrap();
        assert_eq!(partition.components.len(), 1);
        assert_eq!(partition.components[0].kind, ComponentKind::Complete);
        assert_eq!(partition.components[0].size(), 4);
    }

    #[test]
    fn path3_components() {
        // leaves of a path swap, the middle is alone
        let partition = coherent_components(&path(3)).unwrap();
        assert_eq!(partition.components.len(), 2);
        assert_eq!(partition.components[0].vertices, vec![0, 2]);
        assert_eq!(partition.components[0].kind, ComponentKind::Edgeless);
        assert_eq!(partition.components[1].vertices, vec![1]);
        assert_eq!(partition.profile(), "E2+E1");
    }

    #[test]
    fn path4_is_all_singletons() {
        let partition = coherent_components(&path(4)).unwrap();
        assert_eq!(partition.components.len(), 4);
    }

    #[test]
    fn coherent_partition_is_label_equivariant() {
        // relabeling vertices permutes the partition
        let g = path(3);
        // swap labels 0 <-> 1: edges (0,1), (0,2)
        let relabeled = Graph::new(3, vec![(0, 1), (0, 2)]).unwrap();
        let p1 = coherent_components(&g).unwrap();
        let p2 = coherent_components(&relabeled).unwrap();
        // sizes and kinds agree
        let mut s1: Vec<(usize, ComponentKind)> =
            p1.components.iter().map(|c| (c.size(), c.kind)).collect();
        let mut s2: Vec<(usize, ComponentKind)> =
            p2.components.iter().map(|c| (c.size(), c.kind)).collect();
        s1.sort_by_key(|x| x.0);
        s2.sort_by_key(|x| x.0);
        assert_eq!(s1, s2);
        // the swapped leaf class must contain relabeled leaves {1, 2}
        assert!(p2
            .components
            .iter()
            .any(|c| c.vertices == vec![1, 2] && c.kind == ComponentKind::Edgeless));
    }

    #[test]
    fn graph_tameness_small_cases() {
        assert!(graph_tameness(&k(3)).unwrap().tame);
        assert!(!graph_tameness(&k(2)).unwrap().tame);
        assert!(!graph_tameness(&path(3)).unwrap().tame);
        assert!(!graph_tameness(&path(4)).unwrap().tame);
        assert!(graph_tameness(&edgeless(2)).unwrap().tame);
        assert!(!graph_tameness(&edgeless(1)).unwrap().tame);
    }

    #[test]
    fn graph_tameness_exhaustive_patterns() {
        // K_n tame iff n >= 3; edgeless tame iff n >= 2
        for n in 1..=6 {
            assert_eq!(graph_tameness(&k(n)).unwrap().tame, n >= 3, "K_{n}");
            assert_eq!(
                graph_tameness(&edgeless(n)).unwrap().tame,
                n >= 2,
                "edgeless {n}"
            );
        }
    }

    #[test]
    fn graph_algebra_shapes() {
        let single = graph_algebra(&edgeless(1));
        assert_eq!(single.dim(), 1);
        single.validate().unwrap();

        let h = graph_algebra(&k(2));
        assert_eq!(h.dim(), 3);
        h.validate().unwrap();
        // identical structure constants to the Heisenberg algebra
        assert_eq!(h.brackets(), heisenberg().brackets());

        let p3 = graph_algebra(&path(3));
        assert_eq!(p3.dim(), 5);
        p3.validate().unwrap();
    }

    #[test]
    fn direct_sum_dims_add() {
        let s = direct_sum(&heisenberg(), &heisenberg());
        assert_eq!(s.dim(), 6);
        s.validate().unwrap();
        assert_eq!(s.lcs_dims().unwrap(), vec![6, 2, 0]);
    }

    #[test]
    fn direct_sum_tameness_combinator() {
        // H3 + H3: certified no abelian factor, both summands not tame
        let h = heisenberg();
        let s = direct_sum(&h, &h);
        assert!(certifies_no_abelian_factor(s.metadata()));
        assert!(!direct_sum_tameness(false, false, true).unwrap());
        // free(3,2) + free(3,2): both tame
        assert!(direct_sum_tameness(true, true, true).unwrap());
        // refuses without the hypothesis
        assert!(matches!(
            direct_sum_tameness(true, true, false),
            Err(Error::AbelianFactorUncertified)
        ));
    }

    #[test]
    fn abelian_factor_certificates() {
        assert!(certifies_no_abelian_factor(&FamilyTag::Heisenberg));
        assert!(certifies_no_abelian_factor(&FamilyTag::Free { k: 3, c: 2 }));
        assert!(!certifies_no_abelian_factor(&FamilyTag::Free {
            k: 3,
            c: 1
        }));
        assert!(!certifies_no_abelian_factor(&FamilyTag::Abelian { n: 2 }));
        assert!(!certifies_no_abelian_factor(&FamilyTag::Custom));
        // K2 graph: one complete pair, certified
        assert!(certifies_no_abelian_factor(&k(2).family_tag()));
        // P3 has a singleton component: not certified
        assert!(!certifies_no_abelian_factor(&path(3).family_tag()));
        // edgeless components are never certified
        assert!(!certifies_no_abelian_factor(&edgeless(2).family_tag()));
    }

    #[test]
    fn free_tameness_criterion() {
        assert!(free_tameness(3, 2));
        assert!(!free_tameness(2, 2));
        assert!(!free_tameness(1, 1));
        assert!(!free_tameness(2, 3));
        assert!(free_tameness(4, 3));
    }

    #[test]
    fn extend_cat_map_on_heisenberg_free() {
        let free = free_nilpotent(2, 2, DEFAULT_SCALE_CAP).unwrap();
        let m1 = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let phi = extend_degree_one(&free, &m1).unwrap();
        let g = graded_data(&phi).unwrap();
        assert_eq!(
            g.graded_polys,
            vec![
                RatPoly::from_ints(&[1, -3, 1]),
                RatPoly::from_ints(&[-1, 1])
            ]
        );
    }

    #[test]
    fn extend_identity_is_identity() {
        let free = free_nilpotent(2, 3, DEFAULT_SCALE_CAP).unwrap();
        let phi = extend_degree_one(&free, &RatMatrix::identity(2)).unwrap();
        assert_eq!(*phi.matrix(), RatMatrix::identity(free.algebra.dim()));
    }

    #[test]
    fn extend_companion_on_free_3_2() {
        // companion of x^3 - 3x + 1 extends with second graded poly
        // x^3 + 3x^2 - 1, and the whole thing classifies Anosov
        let free = free_nilpotent(3, 2, DEFAULT_SCALE_CAP).unwrap();
        let m1 = RatMatrix::from_int_rows(&[&[0, 0, -1], &[1, 0, 3], &[0, 1, 0]]);
        let phi = extend_degree_one(&free, &m1).unwrap();
        let g = graded_data(&phi).unwrap();
        assert_eq!(
            g.graded_polys,
            vec![
                RatPoly::from_ints(&[1, -3, 0, 1]),
                RatPoly::from_ints(&[-1, 0, 3, 1])
            ]
        );
        let report = crate::spectral::classify(&g.full_poly).unwrap();
        assert!(report.anosov);
    }
}
