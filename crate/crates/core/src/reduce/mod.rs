//! Twin classes, quotients and anchor tags for step graphons.
//!
//! Two blocks are twins when their rows agree on every block of positive
//! weight; zero-weight columns are invisible to every density and are
//! ignored. The quotient by a partition averages values with the block
//! weights, and classes of total weight zero are dropped.

mod coupling;
mod iso;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::density::DensityError;
use crate::graph::GraphError;
use crate::graphon::StepGraphon;
use crate::rational::{unit_threshold, Rational};
use crate::rng::{pick_by_thresholds, Streams};

pub use coupling::{build_coupling, CouplingIoError, CouplingMatrix};
pub use iso::{
    common_quotient, find_distinguishing_graph, find_distinguishing_graph_with, weak_iso,
    CommonQuotient, Matching, WeakIsoVerdict, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("partition covers {found} blocks, graphon has {expected}")]
    PartitionSize { expected: usize, found: usize },
    #[error("class ids must be contiguous from 0; class {0} is empty")]
    EmptyClass(usize),
    #[error("anchor block {block} out of range for {blocks} blocks")]
    InvalidAnchor { block: usize, blocks: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Density(#[from] DensityError),
}

/// Partition of block indices into classes `0..c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    class_of: Vec<usize>,
}

impl BlockPartition {
    /// Validates that every class id in `0..max+1` is used.
    pub fn new(class_of: Vec<usize>) -> Result<Self, ReduceError> {
        let count = class_of.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; count];
        for &c in &class_of {
            used[c] = true;
        }
        if let Some(empty) = used.iter().position(|&u| !u) {
            return Err(ReduceError::EmptyClass(empty));
        }
        Ok(Self { class_of })
    }

    /// Groups indices with equal keys; classes are numbered by first
    /// occurrence.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let mut ids: BTreeMap<&K, usize> = BTreeMap::new();
        let class_of = keys
            .iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Self { class_of }
    }

    pub fn discrete(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
        }
    }

    pub fn single(n: usize) -> Self {
        Self {
            class_of: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn class_of(&self, block: usize) -> usize {
        self.class_of[block]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (b, &c) in self.class_of.iter().enumerate() {
            out[c].push(b);
        }
        out
    }

    /// Same grouping regardless of class numbering.
    pub fn same_grouping(&self, other: &Self) -> bool {
        self.len() == other.len()
            && Self::from_keys(&self.class_of) == Self::from_keys(&other.class_of)
    }
}

/// Values of one block against each anchor block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TagVector(pub Vec<Rational>);

/// A quotient together with where each original block went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graphon: StepGraphon,
    /// Class of each original block; `None` for blocks that were dropped
    /// because their class has zero weight.
    pub block_map: Vec<Option<usize>>,
}

/// Twin classes: equal rows on the positive-weight columns.
pub fn twin_partition(h: &StepGraphon) -> BlockPartition {
    let support = h.positive_blocks();
    let keys: Vec<Vec<&Rational>> = (0..h.num_blocks())
        .map(|b| support.iter().map(|&c| h.value(b, c)).collect())
        .collect();
    BlockPartition::from_keys(&keys)
}

/// Quotient with weight-averaged values, remembering the block map.
pub fn quotient_map(h: &StepGraphon, p: &BlockPartition) -> Result<Reduction, ReduceError> {
    if p.len() != h.num_blocks() {
        return Err(ReduceError::PartitionSize {
            expected: h.num_blocks(),
            found: p.len(),
        });
    }
    let classes = p.classes();
    let class_weight: Vec<Rational> = classes
        .iter()
        .map(|members| members.iter().map(|&b| h.weight(b)).sum())
        .collect();
    let kept: Vec<usize> = (0..classes.len())
        .filter(|&c| class_weight[c].is_positive())
        .collect();
    let mut position = vec![None; classes.len()];
    for (i, &c) in kept.iter().enumerate() {
        position[c] = Some(i);
    }

    let mut values = vec![vec![Rational::zero(); kept.len()]; kept.len()];
    for (s, &cs) in kept.iter().enumerate() {
        for (t, &ct) in kept.iter().enumerate().skip(s) {
            let mut mass = Rational::zero();
            for &i in &classes[cs] {
                for &j in &classes[ct] {
                    let pij = h.weight(i) * h.weight(j);
                    if !pij.is_zero() {
                        mass += pij * h.value(i, j);
                    }
                }
            }
            let avg = mass / (&class_weight[cs] * &class_weight[ct]);
            values[t][s] = avg.clone();
            values[s][t] = avg;
        }
    }
    let weights = kept.iter().map(|&c| class_weight[c].clone()).collect();
    let graphon = StepGraphon::with_range(weights, values, h.range().clone())
        .expect("averages stay within the range and weights sum to one");
    let block_map = (0..h.num_blocks())
        .map(|b| position[p.class_of(b)])
        .collect();
    Ok(Reduction { graphon, block_map })
}

pub fn quotient(h: &StepGraphon, p: &BlockPartition) -> Result<StepGraphon, ReduceError> {
    quotient_map(h, p).map(|r| r.graphon)
}

/// Drops zero-weight blocks and merges twins.
pub fn twin_reduction(h: &StepGraphon) -> Reduction {
    let support = h.positive_blocks();
    let twins = twin_partition(h);
    // zero-weight blocks get their own classes so the quotient drops them
    let keys: Vec<(bool, usize)> = (0..h.num_blocks())
        .map(|b| match support.binary_search(&b) {
            Ok(_) => (true, twins.class_of(b)),
            Err(_) => (false, b),
        })
        .collect();
    quotient_map(h, &BlockPartition::from_keys(&keys)).expect("partition sized to the graphon")
}

/// Twin-free form: positive weights, pairwise distinct rows.
pub fn twin_reduce(h: &StepGraphon) -> StepGraphon {
    twin_reduction(h).graphon
}

/// Whether no two rows coincide and every weight is positive.
pub fn is_twin_free(h: &StepGraphon) -> bool {
    h.positive_blocks().len() == h.num_blocks() && twin_partition(h).num_classes() == h.num_blocks()
}

fn check_anchors(h: &StepGraphon, anchors: &[usize]) -> Result<(), ReduceError> {
    match anchors.iter().find(|&&a| a >= h.num_blocks()) {
        Some(&block) => Err(ReduceError::InvalidAnchor {
            block,
            blocks: h.num_blocks(),
        }),
        None => Ok(()),
    }
}

/// Tag of every block (its values against the anchors) and the partition
/// into equal tags.
pub fn anchor_tags(
    h: &StepGraphon,
    anchors: &[usize],
) -> Result<(Vec<TagVector>, BlockPartition), ReduceError> {
    check_anchors(h, anchors)?;
    let tags: Vec<TagVector> = (0..h.num_blocks())
        .map(|b| TagVector(anchors.iter().map(|&a| h.value(b, a).clone()).collect()))
        .collect();
    let partition = BlockPartition::from_keys(&tags);
    Ok((tags, partition))
}

/// `m` blocks drawn independently with probabilities equal to the weights.
pub fn random_anchors(h: &StepGraphon, m: usize, seed: u64) -> Vec<usize> {
    let thresholds: Vec<u64> = h.cumulative_weights().iter().map(unit_threshold).collect();
    let mut cursor = Streams::new(seed).positioned(0, 0);
    (0..m)
        .map(|_| pick_by_thresholds(cursor.next_bits(), &thresholds))
        .collect()
}

/// Quotient by the anchor-tag partition.
pub fn anchored_quotient(h: &StepGraphon, anchors: &[usize]) -> Result<StepGraphon, ReduceError> {
    let (_, partition) = anchor_tags(h, anchors)?;
    quotient(h, &partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphon::bipartite;
    use crate::rational::{int, ratio};

    fn split_constant(c: Rational, parts: i64) -> StepGraphon {
        let n = parts as usize;
        StepGraphon::new(vec![ratio(1, parts); n], vec![vec![c; n]; n]).unwrap()
    }

    #[test]
    fn twin_partition_examples() {
        let b = bipartite();
        let p = twin_partition(&b.blowup(2));
        assert_eq!(p.as_slice(), &[0, 0, 1, 1]);
        assert_eq!(twin_partition(&b).as_slice(), &[0, 1]);
        assert_eq!(
            twin_partition(&split_constant(ratio(1, 3), 4)).num_classes(),
            1
        );
    }

    #[test]
    fn zero_weight_columns_are_ignored() {
        // blocks 0 and 1 differ only against the zero-weight block 2
        let h = StepGraphon::new(
            vec![ratio(1, 2), ratio(1, 2), int(0)],
            vec![
                vec![ratio(1, 2), ratio(1, 2), int(0)],
                vec![ratio(1, 2), ratio(1, 2), int(1)],
                vec![int(0), int(1), int(1)],
            ],
        )
        .unwrap();
        assert_eq!(
            twin_partition(&h).class_of(0),
            twin_partition(&h).class_of(1)
        );
        let red = twin_reduction(&h);
        assert_eq!(red.graphon, StepGraphon::constant(ratio(1, 2)).unwrap());
        assert_eq!(red.block_map, vec![Some(0), Some(0), None]);
    }

    #[test]
    fn quotient_examples() {
        let b = bipartite();
        let b3 = b.blowup(3);
        assert_eq!(quotient(&b3, &twin_partition(&b3)).unwrap(), b);
        assert_eq!(quotient(&b, &BlockPartition::discrete(2)).unwrap(), b);
        assert_eq!(
            quotient(&b, &BlockPartition::single(2)).unwrap(),
            StepGraphon::constant(ratio(1, 2)).unwrap()
        );
        assert_eq!(
            quotient(&b, &BlockPartition::single(3)),
            Err(ReduceError::PartitionSize {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn twin_reduce_examples() {
        let b = bipartite();
        for k in 1..=3 {
            assert_eq!(twin_reduce(&b.blowup(k)), twin_reduce(&b));
        }
        assert_eq!(twin_reduce(&b), b);
        assert_eq!(
            twin_reduce(&split_constant(ratio(2, 5), 4)),
            StepGraphon::constant(ratio(2, 5)).unwrap()
        );
        assert!(is_twin_free(&b));
        assert!(!is_twin_free(&b.blowup(2)));
    }

    #[test]
    fn partition_validation() {
        assert!(BlockPartition::new(vec![0, 1, 0]).is_ok());
        assert_eq!(
            BlockPartition::new(vec![0, 2]),
            Err(ReduceError::EmptyClass(1))
        );
        assert!(BlockPartition::new(vec![1, 0])
            .unwrap()
            .same_grouping(&BlockPartition::new(vec![0, 1]).unwrap()));
    }

    #[test]
    fn anchor_tag_examples() {
        let b = bipartite();
        let (tags, p) = anchor_tags(&b, &[0]).unwrap();
        assert_eq!(tags, vec![TagVector(vec![int(0)]), TagVector(vec![int(1)])]);
        assert_eq!(p.num_classes(), 2);
        let (_, p) = anchor_tags(&b.blowup(3), &[]).unwrap();
        assert_eq!(p.num_classes(), 1);
        let b2 = b.blowup(2);
        let (_, p) = anchor_tags(&b2, &[0, 1]).unwrap();
        assert!(p.same_grouping(&twin_partition(&b2)));
        assert_eq!(
            anchor_tags(&b, &[2]).unwrap_err(),
            ReduceError::InvalidAnchor {
                block: 2,
                blocks: 2
            }
        );
    }

    #[test]
    fn random_anchor_examples() {
        let b = bipartite();
        assert!(random_anchors(&b, 0, 1).is_empty());
        let draws = random_anchors(&b, 10_000, 11);
        let zeros = draws.iter().filter(|&&a| a == 0).count() as f64 / 1e4;
        assert!((zeros - 0.5).abs() < 0.02, "frequency {zeros}");
        assert_eq!(draws, random_anchors(&b, 10_000, 11));
        // zero-weight blocks are never drawn
        let h = StepGraphon::new(vec![int(0), int(1)], vec![vec![int(0); 2]; 2]).unwrap();
        assert!(random_anchors(&h, 1000, 3).iter().all(|&a| a == 1));
    }

    #[test]
    fn anchored_quotient_examples() {
        let b = bipartite();
        assert_eq!(anchored_quotient(&b, &[0]).unwrap(), b);
        let b3 = b.blowup(3);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(anchored_quotient(&b3, &all).unwrap(), twin_reduce(&b3));
        assert_eq!(
            anchored_quotient(&b3, &[]).unwrap(),
            StepGraphon::constant(ratio(1, 2)).unwrap()
        );
    }
}
