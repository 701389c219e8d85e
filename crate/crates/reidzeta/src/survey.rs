//! Reproducible random-graph tameness surveys.
//!
//! Rows are sampled as Erdos-Renyi `G(n, 1/2)`: one ChaCha8 stream per row,
//! keyed by `(seed, row)`, one bit per vertex pair in lexicographic order.
//! The generator identity is part of the output header, and the CSV is
//! byte-identical across runs with the same parameters.

use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{find_tame_witness, graph_tameness, Graph};

/// Generator identity recorded in survey headers.
pub const PRNG_ID: &str = "chacha8";

pub const MAX_SURVEY_VERTICES: usize = 16;
pub const MAX_SURVEY_SAMPLES: u64 = 100_000;

/// Dedicated stream for one survey row.
pub fn row_rng(seed: u64, row: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&row.to_le_bytes());
    key[16..].copy_from_slice(b"reidzeta-survey!");
    ChaCha8Rng::from_seed(key)
}

/// `G(n, 1/2)` sample for the given row: one bit per pair `(i, j)`, `i < j`
/// in lexicographic order, from the row's stream.
pub fn sample_graph(seed: u64, row: u64, n: usize) -> Graph {
    let mut rng = row_rng(seed, row);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_u32() & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("sampled graph is simple by construction")
}

#[derive(Clone, Debug)]
pub enum SurveyMode {
    /// `rows` independent samples.
    Samples(u64),
    /// Every graph on `n` labeled vertices, rows indexed by edge bitmask.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub vertices: usize,
    pub mode: SurveyMode,
    pub seed: u64,
    /// When set, run a witness search with this candidate budget on every
    /// tame row.
    pub witness_budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found { attempts: u64 },
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub seed: u64,
    pub row: u64,
    pub n: usize,
    pub edges: usize,
    pub components: usize,
    pub profile: String,
    pub tame: bool,
    pub witness: Option<WitnessOutcome>,
}

#[derive(Clone, Debug)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    pub tame_count: u64,
    pub witness_requested: bool,
}

pub fn run_survey(opts: &SurveyOptions) -> Result<SurveyReport> {
    if opts.vertices == 0 || opts.vertices > MAX_SURVEY_VERTICES {
        return Err(Error::invalid(format!(
            "vertex count must be 1..={MAX_SURVEY_VERTICES}"
        )));
    }
    let rows_iter: Vec<(u64, Graph)> = match opts.mode {
        SurveyMode::Samples(samples) => {
            if samples == 0 || samples > MAX_SURVEY_SAMPLES {
                return Err(Error::invalid(format!(
                    "sample count must be 1..={MAX_SURVEY_SAMPLES}"
                )));
            }
            (0..samples)
                .map(|row| (row, sample_graph(opts.seed, row, opts.vertices)))
                .collect()
        }
        SurveyMode::Exhaustive => {
            let pairs = opts.vertices * (opts.vertices - 1) / 2;
            if pairs > 20 {
                return Err(Error::invalid(
                    "exhaustive mode supports at most 6 vertices (2^15 graphs)",
                ));
            }
            (0..1u64 << pairs)
                .map(|mask| {
                    (
                        mask,
                        Graph::from_bitmask(opts.vertices, mask).expect("bitmask graph is simple"),
                    )
                })
                .collect()
        }
    };

    let mut rows = Vec::with_capacity(rows_iter.len());
    let mut tame_count = 0u64;
    for (row_idx, graph) in rows_iter {
        let verdict = graph_tameness(&graph)?;
        if verdict.tame {
            tame_count += 1;
        }
        let witness = match (&opts.witness_budget, verdict.tame) {
            (Some(budget), true) => {
                // continue the row's stream past the sampling bits
                let mut rng = row_rng(opts.seed, row_idx);
                let pairs = opts.vertices * (opts.vertices - 1) / 2;
                for _ in 0..pairs {
                    rng.next_u32();
                }
                match find_tame_witness(&graph, &mut rng, *budget)? {
                    Some(w) => Some(WitnessOutcome::Found {
                        attempts: w.attempts,
                    }),
                    None => Some(WitnessOutcome::BudgetExceeded),
                }
            }
            _ => None,
        };
        rows.push(SurveyRow {
            seed: opts.seed,
            row: row_idx,
            n: graph.vertex_count(),
            edges: graph.edge_count(),
            components: verdict.partition.components.len(),
            profile: verdict.partition.profile(),
            tame: verdict.tame,
            witness,
        });
    }
    Ok(SurveyReport {
        rows,
        tame_count,
        witness_requested: opts.witness_budget.is_some(),
    })
}

/// Fixed columns `seed,row,n,edges,components,profile,tame`, with a
/// trailing `witness` column only when a witness budget was requested.
/// Header and summary travel as `#` comment lines.
pub fn report_to_csv(report: &SurveyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# prng={PRNG_ID}");
    if report.witness_requested {
        let _ = writeln!(out, "seed,row,n,edges,components,profile,tame,witness");
    } else {
        let _ = writeln!(out, "seed,row,n,edges,components,profile,tame");
    }
    for row in &report.rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{}",
            row.seed, row.row, row.n, row.edges, row.components, row.profile, row.tame
        );
        if report.witness_requested {
            let cell = match &row.witness {
                None => "-".to_string(),
                Some(WitnessOutcome::Found { attempts }) => format!("found:{attempts}"),
                Some(WitnessOutcome::BudgetExceeded) => "budget_exceeded".to_string(),
            };
            let _ = write!(out, ",{cell}");
        }
        let _ = writeln!(out);
    }
    let total = report.rows.len();
    let _ = writeln!(out, "# tame {}/{}", report.tame_count, total);
    out
}
