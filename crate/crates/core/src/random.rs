//! W-random graphs and the empirical convergence of their densities.

use std::fmt::Write as _;

use num_traits::Signed;
use thiserror::Error;

use crate::density::{DensityEngine, DensityError};
use crate::graph::LabeledMultigraph;
use crate::graphon::StepGraphon;
use crate::par::Execution;
use crate::rational::{format_sig12, to_f64, unit_threshold, Rational};
use crate::rng::{derive_seed, pick_by_thresholds, Streams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomGraphError {
    #[error("edge probabilities must lie in [0, 1]")]
    NotProbabilities,
    #[error("graph must have at least one node")]
    NoNodes,
    #[error("size {n} is smaller than the motif ({nodes} nodes)")]
    SizeTooSmall { n: usize, nodes: usize },
    #[error("at least one replication is required")]
    NoReplications,
    #[error(transparent)]
    Density(#[from] DensityError),
}

/// Block index of each node and the sampled simple graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub blocks: Vec<usize>,
    pub graph: LabeledMultigraph,
}

/// Node `i` draws its block from stream 0 at position `i`; the coin for the
/// pair `i < j` is draw `j` of stream `1 + i`. Every draw is addressed by
/// the pair alone, so rows can be generated in any order.
pub fn sample_wrandom_with(
    h: &StepGraphon,
    n: usize,
    seed: u64,
    execution: Execution,
) -> Result<Sample, RandomGraphError> {
    if !h.range().within_unit() {
        return Err(RandomGraphError::NotProbabilities);
    }
    if n == 0 {
        return Err(RandomGraphError::NoNodes);
    }
    let streams = Streams::new(seed);
    let cumulative: Vec<u64> = h.cumulative_weights().iter().map(unit_threshold).collect();
    let mut bits = vec![0u64; n];
    streams.fill(0, 0, &mut bits);
    let blocks: Vec<usize> = bits
        .iter()
        .map(|&b| pick_by_thresholds(b, &cumulative))
        .collect();
    let thresholds: Vec<Vec<u64>> = h
        .values()
        .iter()
        .map(|row| row.iter().map(unit_threshold).collect())
        .collect();
    let rows = execution.map_range(n, |i| {
        let mut coins = vec![0u64; n - i - 1];
        streams.fill(1 + i as u64, (i + 1) as u64, &mut coins);
        coins
            .iter()
            .enumerate()
            .filter(|&(d, &c)| c < thresholds[blocks[i]][blocks[i + 1 + d]])
            .map(|(d, _)| (i, i + 1 + d))
            .collect::<Vec<_>>()
    });
    let edges: Vec<(usize, usize)> = rows.into_iter().flatten().collect();
    let graph = LabeledMultigraph::from_edges(n, &edges).expect("pairs are distinct and in range");
    Ok(Sample { blocks, graph })
}

pub fn sample_wrandom(
    h: &StepGraphon,
    n: usize,
    seed: u64,
) -> Result<LabeledMultigraph, RandomGraphError> {
    Ok(sample_wrandom_with(h, n, seed, Execution::default())?.graph)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub reps: usize,
    pub median_err: f64,
    pub max_err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub motif: LabeledMultigraph,
    pub target: Rational,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// Edge list of the motif, e.g. `0-1 1-2`.
    pub fn motif_name(&self) -> String {
        let parts: Vec<String> = self
            .motif
            .edges()
            .map(|((u, v), m)| {
                if m == 1 {
                    format!("{u}-{v}")
                } else {
                    format!("{u}-{v}x{m}")
                }
            })
            .collect();
        if parts.is_empty() {
            format!("empty{}", self.motif.node_count())
        } else {
            parts.join(" ")
        }
    }

    pub fn medians_decreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].median_err < w[0].median_err)
    }

    pub fn to_csv(&self) -> String {
        let motif = self.motif_name();
        let mut out = String::from("motif,n,rep_count,median_err,max_err\n");
        for r in &self.rows {
            writeln!(
                out,
                "{motif},{},{},{},{}",
                r.n,
                r.reps,
                format_sig12(r.median_err),
                format_sig12(r.max_err)
            )
            .expect("writing to a string");
        }
        out
    }
}

fn median(sorted: &[f64]) -> f64 {
    let m = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[m]
    } else {
        (sorted[m - 1] + sorted[m]) / 2.0
    }
}

/// Samples `reps` graphs per size, each from the seed
/// `derive_seed(seed, n, rep)`, and records `|t(F, G_n) - t(F, H)|`.
pub fn convergence_experiment_with(
    h: &StepGraphon,
    f: &LabeledMultigraph,
    sizes: &[usize],
    reps: usize,
    seed: u64,
    execution: Execution,
) -> Result<ConvergenceReport, RandomGraphError> {
    if reps == 0 {
        return Err(RandomGraphError::NoReplications);
    }
    if let Some(&n) = sizes.iter().find(|&&n| n < f.node_count()) {
        return Err(RandomGraphError::SizeTooSmall {
            n,
            nodes: f.node_count(),
        });
    }
    let engine = DensityEngine::new(Default::default(), execution);
    let target = engine.density_exact(f, h)?;
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let errors = execution.map_range(reps, |r| -> Result<f64, RandomGraphError> {
            let s = derive_seed(seed, n as u64, r as u64);
            let g = sample_wrandom_with(h, n, s, Execution::Sequential)?.graph;
            let t = DensityEngine::sequential().density_graph(f, &g)?;
            Ok(to_f64(&(t - &target).abs()))
        });
        let mut errors = errors.into_iter().collect::<Result<Vec<f64>, _>>()?;
        errors.sort_by(f64::total_cmp);
        rows.push(ConvergenceRow {
            n,
            reps,
            median_err: median(&errors),
            max_err: *errors.last().expect("reps >= 1"),
        });
    }
    Ok(ConvergenceReport {
        motif: f.clone(),
        target,
        rows,
    })
}

pub fn convergence_experiment(
    h: &StepGraphon,
    f: &LabeledMultigraph,
    sizes: &[usize],
    reps: usize,
    seed: u64,
) -> Result<ConvergenceReport, RandomGraphError> {
    convergence_experiment_with(h, f, sizes, reps, seed, Execution::default())
}
