//! Bounded search for explicit tame automorphisms of graph algebras.
//!
//! For a graph whose coherent components all pass the tameness criterion,
//! a concrete witness is assembled from one unimodular integer block per
//! component (components are interchangeable vertex sets, so any block
//! respects the edge pattern) and extended to the edge space by bracketing
//! images. A candidate wins when the full characteristic polynomial has no
//! root-of-unity eigenvalue; products of eigenvalues across components can
//! conspire to land on a root of unity, so candidates are retried under a
//! budget with fresh random blocks.

use rand::Rng;

use crate::error::Result;
use crate::families::{coherent_components, graph_algebra, graph_tameness, Graph};
use crate::matrix::RatMatrix;
use crate::nilpotent::check_automorphism;
use crate::rat::{rat_int, Rat};
use crate::spectral;

/// A found witness: an integer-like automorphism of the graph algebra with
/// no eigenvalue that is a root of unity.
#[derive(Clone, Debug)]
pub struct Witness {
    /// Matrix on the full algebra (vertices then edges).
    pub matrix: RatMatrix,
    /// Candidates tried, including the successful one.
    pub attempts: u64,
}

/// Canned first guesses: spectra known to avoid roots of unity.
fn canned_block(size: usize) -> Option<RatMatrix> {
    match size {
        2 => Some(RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]])),
        // companion of x^3 - 3x + 1 (totally real, no unit-circle roots)
        3 => Some(RatMatrix::from_int_rows(&[
            &[0, 0, -1],
            &[1, 0, 3],
            &[0, 1, 0],
        ])),
        _ => None,
    }
}

/// Random element of GL_size(Z) as a short product of elementary
/// operations.
fn random_unimodular(size: usize, rng: &mut impl Rng) -> RatMatrix {
    let mut m = RatMatrix::identity(size);
    let ops = 3 * size + 2;
    for _ in 0..ops {
        let r = rng.gen_range(0..size);
        let mut s = rng.gen_range(0..size);
        if size > 1 {
            while s == r {
                s = rng.gen_range(0..size);
            }
        }
        match rng.gen_range(0..8u8) {
            // row_r += t * row_s
            0..=5 if size > 1 => {
                let t = rat_int([-2i64, -1, 1, 2][rng.gen_range(0..4)]);
                for c in 0..size {
                    let delta = &t * m.get(s, c);
                    *m.get_mut(r, c) = m.get(r, c) + delta;
                }
            }
            // negate a row
            6 => {
                for c in 0..size {
                    *m.get_mut(r, c) = -m.get(r, c).clone();
                }
            }
            // swap two rows
            _ if size > 1 => {
                for c in 0..size {
                    let a = m.get(r, c).clone();
                    let b = m.get(s, c).clone();
                    *m.get_mut(r, c) = b;
                    *m.get_mut(s, c) = a;
                }
            }
            _ => {}
        }
    }
    m
}

/// Assembles the full algebra automorphism from per-component vertex
/// blocks: vertex images from the blocks, edge images by bracketing.
fn assemble(g: &Graph, component_vertices: &[Vec<usize>], blocks: &[RatMatrix]) -> RatMatrix {
    let n = g.vertex_count();
    let algebra = graph_algebra(g);
    let dim = algebra.dim();
    let mut vertex_images: Vec<Vec<Rat>> = vec![vec![Rat::from_integer(0.into()); dim]; n];
    for (vertices, block) in component_vertices.iter().zip(blocks) {
        for (bc, &v) in vertices.iter().enumerate() {
            for (br, &w) in vertices.iter().enumerate() {
                vertex_images[v][w] = block.get(br, bc).clone();
            }
        }
    }
    let mut matrix = RatMatrix::zeros(dim, dim);
    for v in 0..n {
        for (row, val) in vertex_images[v].iter().enumerate() {
            *matrix.get_mut(row, v) = val.clone();
        }
    }
    for (idx, (a, b)) in g.edges().enumerate() {
        let img = algebra.bracket(&vertex_images[a], &vertex_images[b]);
        for (row, val) in img.iter().enumerate() {
            *matrix.get_mut(row, n + idx) = val.clone();
        }
    }
    matrix
}

/// Searches for a tame witness on `g` within `budget` candidates.
///
/// Returns `Ok(None)` when the graph fails the tameness criterion (no
/// witness can exist) or when the budget runs out.
pub fn find_tame_witness(g: &Graph, rng: &mut impl Rng, budget: u64) -> Result<Option<Witness>> {
    if !graph_tameness(g)?.tame {
        return Ok(None);
    }
    let partition = coherent_components(g)?;
    let component_vertices: Vec<Vec<usize>> = partition
        .components
        .iter()
        .map(|c| c.vertices.clone())
        .collect();
    let algebra = graph_algebra(g);

    for attempt in 1..=budget {
        let blocks: Vec<RatMatrix> = component_vertices
            .iter()
            .map(|vs| {
                let size = vs.len();
                if attempt == 1 {
                    if let Some(b) = canned_block(size) {
                        return b;
                    }
                }
                random_unimodular(size, rng)
            })
            .collect();
        let candidate = assemble(g, &component_vertices, &blocks);
        let phi = check_automorphism(&algebra, candidate)?;
        let poly = phi.matrix().char_poly()?;
        if !spectral::is_integer_like(&poly) {
            continue;
        }
        if spectral::root_of_unity_order(&poly)?.is_none() {
            return Ok(Some(Witness {
                matrix: phi.matrix().clone(),
                attempts: attempt,
            }));
        }
    }
    Ok(None)
}
