//! JSON wire formats.
//!
//! All rationals travel as strings like `"3"` or `"-1/2"`; indices are
//! 1-based on the wire and 0-based in memory. Parsers are total: malformed
//! input of any shape comes back as `Error::Invalid`, never a panic, and
//! size fields are capped before any allocation depends on them. These
//! functions are the crate's untrusted-input boundary and are fuzzed.
//!
//! - NilAlgebra: `{"dim": n, "basis": [...], "brackets": {"i,j": ["c1", ...]},
//!   "metadata": {...}?}`
//! - Matrix: `{"matrix": [["a", "b"], ...]}`
//! - Graph: `{"n": 4, "edges": [[1,2], [2,3]]}`
//! - Cayley table: `{"order": m, "identity": 0, "table": [[...], ...]}`
//!   (0-based)
//! - Endomorphism: `{"images": [...]}` (0-based)

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{FamilyTag, Graph};
use crate::matrix::RatMatrix;
use crate::nilpotent::NilAlgebra;
use crate::oracle::FiniteGroup;
use crate::rat::{parse_rat, rat_to_string};

/// Parse-time cap on declared dimensions, generous against the desk-scale
/// cap but tight enough to bound allocations.
pub const MAX_PARSE_DIM: usize = 4096;

fn json_err(e: serde_json::Error) -> Error {
    Error::invalid(format!("json: {e}"))
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    brackets: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metadata: Option<FamilyTag>,
}

pub fn parse_algebra_json(input: &str) -> Result<NilAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(input).map_err(json_err)?;
    if doc.dim > MAX_PARSE_DIM {
        return Err(Error::invalid(format!(
            "dim {} exceeds the parse cap {MAX_PARSE_DIM}",
            doc.dim
        )));
    }
    let mut brackets = BTreeMap::new();
    for (key, values) in doc.brackets {
        let (i, j) = key
            .split_once(',')
            .ok_or_else(|| Error::invalid(format!("bracket key {key:?} is not \"i,j\"")))?;
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad index in bracket key {key:?}")))?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad index in bracket key {key:?}")))?;
        if i == 0 || j == 0 {
            return Err(Error::invalid(format!(
                "bracket key {key:?}: indices are 1-based"
            )));
        }
        let coeffs = values
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        brackets.insert((i - 1, j - 1), coeffs);
    }
    NilAlgebra::new(
        doc.dim,
        doc.basis,
        brackets,
        doc.metadata.unwrap_or(FamilyTag::Custom),
    )
}

pub fn algebra_to_json(algebra: &NilAlgebra) -> String {
    let brackets: BTreeMap<String, Vec<String>> = algebra
        .brackets()
        .iter()
        .map(|(&(i, j), v)| {
            (
                format!("{},{}", i + 1, j + 1),
                v.iter().map(rat_to_string).collect(),
            )
        })
        .collect();
    let doc = AlgebraDoc {
        dim: algebra.dim(),
        basis: Some(algebra.basis_names().to_vec()),
        brackets,
        metadata: match algebra.metadata() {
            FamilyTag::Custom => None,
            tag => Some(tag.clone()),
        },
    };
    serde_json::to_string_pretty(&doc).expect("algebra serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    matrix: Vec<Vec<String>>,
}

pub fn parse_matrix_json(input: &str) -> Result<RatMatrix> {
    let doc: MatrixDoc = serde_json::from_str(input).map_err(json_err)?;
    let rows = doc.matrix.len();
    if rows == 0 {
        return Err(Error::invalid("matrix has no rows"));
    }
    if rows > MAX_PARSE_DIM {
        return Err(Error::invalid("matrix row count exceeds the parse cap"));
    }
    let cols = doc.matrix[0].len();
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in doc.matrix.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::invalid(format!(
                "row {} has {} entries, expected {cols}",
                r + 1,
                row.len()
            )));
        }
        for s in row {
            entries.push(parse_rat(s)?);
        }
    }
    RatMatrix::new(rows, cols, entries)
}

pub fn matrix_to_json(m: &RatMatrix) -> String {
    let doc = MatrixDoc {
        matrix: (0..m.rows())
            .map(|r| m.row(r).iter().map(rat_to_string).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("matrix serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_graph_json(input: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(input).map_err(json_err)?;
    if doc.n > MAX_PARSE_DIM {
        return Err(Error::invalid("vertex count exceeds the parse cap"));
    }
    let edges = doc
        .edges
        .iter()
        .map(|&(a, b)| {
            if a == 0 || b == 0 {
                Err(Error::invalid("vertices are 1-based"))
            } else {
                Ok((a - 1, b - 1))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::new(doc.n, edges)
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.vertex_count(),
        edges: g.edges().map(|(a, b)| (a + 1, b + 1)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
struct CayleyDoc {
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

pub fn parse_cayley_json(input: &str) -> Result<FiniteGroup> {
    let doc: CayleyDoc = serde_json::from_str(input).map_err(json_err)?;
    if doc.table.len() != doc.order {
        return Err(Error::invalid(format!(
            "declared order {} but the table has {} rows",
            doc.order,
            doc.table.len()
        )));
    }
    FiniteGroup::new(doc.identity, doc.table)
}

pub fn cayley_to_json(group: &FiniteGroup) -> String {
    let doc = CayleyDoc {
        order: group.order(),
        identity: group.identity(),
        table: group.table().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("cayley serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
struct EndoDoc {
    images: Vec<usize>,
}

/// Image vector only; bind it to a group with `FiniteEndo::new`.
pub fn parse_endo_json(input: &str) -> Result<Vec<usize>> {
    let doc: EndoDoc = serde_json::from_str(input).map_err(json_err)?;
    if doc.images.len() > MAX_PARSE_DIM {
        return Err(Error::invalid("image vector exceeds the parse cap"));
    }
    Ok(doc.images)
}

pub fn endo_to_json(images: &[usize]) -> String {
    serde_json::to_string_pretty(&EndoDoc {
        images: images.to_vec(),
    })
    .expect("endo serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn algebra_round_trip() {
        let h = families::heisenberg();
        let json = algebra_to_json(&h);
        let back = parse_algebra_json(&json).unwrap();
        assert_eq!(back.dim(), 3);
        assert_eq!(back.brackets(), h.brackets());
        assert_eq!(back.metadata(), h.metadata());
        back.validate().unwrap();
    }

    #[test]
    fn algebra_rejects_malformed() {
        for bad in [
            "",
            "{",
            "{\"dim\": 2}",
            "{\"dim\": 1000000, \"brackets\": {}}",
            "{\"dim\": 3, \"brackets\": {\"1\": [\"0\",\"0\",\"1\"]}}",
            "{\"dim\": 3, \"brackets\": {\"2,1\": [\"0\",\"0\",\"1\"]}}",
            "{\"dim\": 3, \"brackets\": {\"0,1\": [\"0\",\"0\",\"1\"]}}",
            "{\"dim\": 3, \"brackets\": {\"1,2\": [\"0\",\"1\"]}}",
            "{\"dim\": 3, \"brackets\": {\"1,2\": [\"0\",\"0\",\"1/0\"]}}",
            "{\"dim\": 2, \"basis\": [\"a\"], \"brackets\": {}}",
        ] {
            assert!(parse_algebra_json(bad).is_err(), "accepted: {bad}");
        }
    }

    #[test]
    fn algebra_accepts_minimal_form() {
        let a = parse_algebra_json("{\"dim\": 2, \"brackets\": {}}").unwrap();
        assert_eq!(a.basis_names(), &["e1".to_string(), "e2".to_string()]);
    }

    #[test]
    fn matrix_round_trip_and_rejects() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let json = matrix_to_json(&m);
        assert_eq!(parse_matrix_json(&json).unwrap(), m);
        for bad in [
            "",
            "{}",
            "{\"matrix\": []}",
            "{\"matrix\": [[\"1\"], [\"1\", \"2\"]]}",
            "{\"matrix\": [[\"x\"]]}",
            "{\"matrix\": [[\"1/0\"]]}",
        ] {
            assert!(parse_matrix_json(bad).is_err(), "accepted: {bad}");
        }
        // rationals allowed
        let m = parse_matrix_json("{\"matrix\": [[\"1/2\", \"-3\"], [\"0\", \"7/5\"]]}").unwrap();
        assert_eq!(m.rows(), 2);
    }

    #[test]
    fn graph_round_trip_and_rejects() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let json = graph_to_json(&g);
        assert_eq!(parse_graph_json(&json).unwrap(), g);
        for bad in [
            "{\"n\": 0, \"edges\": []}",
            "{\"n\": 3, \"edges\": [[0, 1]]}",
            "{\"n\": 3, \"edges\": [[1, 1]]}",
            "{\"n\": 3, \"edges\": [[1, 4]]}",
        ] {
            assert!(parse_graph_json(bad).is_err(), "accepted: {bad}");
        }
    }

    #[test]
    fn cayley_and_endo_round_trip() {
        let g = FiniteGroup::cyclic(4);
        let json = cayley_to_json(&g);
        let back = parse_cayley_json(&json).unwrap();
        assert_eq!(back.order(), 4);
        let images = parse_endo_json("{\"images\": [0, 2, 0, 2]}").unwrap();
        crate::oracle::FiniteEndo::new(&back, images).unwrap();

        assert!(parse_cayley_json("{\"order\": 2, \"identity\": 0, \"table\": [[0,1]]}").is_err());
        assert!(parse_cayley_json("{\"order\": 1, \"identity\": 3, \"table\": [[0]]}").is_err());
    }

    #[test]
    fn metadata_tags_round_trip() {
        let tags = vec![
            FamilyTag::Abelian { n: 4 },
            FamilyTag::Heisenberg,
            FamilyTag::Free { k: 3, c: 2 },
            FamilyTag::Graph {
                n: 2,
                edges: vec![(1, 2)],
            },
            FamilyTag::DirectSum {
                parts: vec![FamilyTag::Heisenberg, FamilyTag::Free { k: 3, c: 2 }],
            },
        ];
        for tag in tags {
            let json = serde_json::to_string(&tag).unwrap();
            let back: FamilyTag = serde_json::from_str(&json).unwrap();
            assert_eq!(back, tag);
        }
    }
}
