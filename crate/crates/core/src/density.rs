//! Homomorphism densities: exact sums over block assignments, hom counting in
//! finite graphs, anchored densities and seeded Monte Carlo estimates.
//!
//! The exact paths scale all weights and values to integers over common
//! denominators and accumulate in `i128`, redoing the sum with big integers
//! only if an intermediate product overflows.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{star_multigraph, Label, LabeledMultigraph, NodeId};
use crate::graphon::{BlackBoxKernel, StepGraphon};
use crate::par::Execution;
use crate::rational::{
    common_denominator, format_rational, format_sig12, pow, scaled_numerator, Rational,
};
use crate::rng::Streams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("pattern has {nodes} nodes, limit is {limit}")]
    PatternTooLarge { nodes: usize, limit: usize },
    #[error("graphon has {blocks} blocks, limit is {limit}")]
    TooManyBlocks { blocks: usize, limit: usize },
    #[error("{blocks}^{nodes} block assignments exceed the budget of {budget}")]
    AssignmentBudget {
        blocks: usize,
        nodes: usize,
        budget: u64,
    },
    #[error("host graph must be simple")]
    HostNotSimple,
    #[error("{0} graph must be unlabeled")]
    Labeled(&'static str),
    #[error("no anchor given for label {0}")]
    MissingAnchor(Label),
    #[error("anchor block {block} out of range for {blocks} blocks")]
    InvalidAnchor { block: usize, blocks: usize },
    #[error("{anchors} anchors but {exponents} exponents")]
    LengthMismatch { anchors: usize, exponents: usize },
    #[error("Monte Carlo needs at least 2 samples")]
    TooFewSamples,
    #[error("label sets differ: {0:?} vs {1:?}")]
    LabelMismatch(Vec<Label>, Vec<Label>),
    #[error("{labels} labels exceed the limit of {limit}")]
    TooManyLabels { labels: usize, limit: usize },
}

/// Size limits for the exact evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_pattern_nodes: usize,
    pub max_blocks: usize,
    /// Upper bound on `blocks^free_nodes` for one exact evaluation.
    pub max_assignments: u64,
    pub max_identity_labels: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_pattern_nodes: 8,
            max_blocks: 64,
            max_assignments: 1 << 40,
            max_identity_labels: 4,
        }
    }
}

/// Monte Carlo estimate of a density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

impl fmt::Display for Estimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ± {} ({})",
            format_sig12(self.mean),
            format_sig12(self.stderr),
            self.samples
        )
    }
}

/// Either an exact density or an estimate.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityValue {
    Exact(Rational),
    Estimate(Estimate),
}

impl DensityValue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            DensityValue::Exact(r) => Some(r),
            DensityValue::Estimate(_) => None,
        }
    }
}

impl From<Rational> for DensityValue {
    fn from(r: Rational) -> Self {
        DensityValue::Exact(r)
    }
}

impl From<Estimate> for DensityValue {
    fn from(e: Estimate) -> Self {
        DensityValue::Estimate(e)
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityValue::Exact(r) => f.write_str(&format_rational(r)),
            DensityValue::Estimate(e) => e.fmt(f),
        }
    }
}

/// Labels pinned to blocks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnchorAssignment(BTreeMap<Label, usize>);

impl AnchorAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, label: Label, block: usize) -> Self {
        self.0.insert(label, block);
        self
    }

    pub fn insert(&mut self, label: Label, block: usize) -> Option<usize> {
        self.0.insert(label, block)
    }

    pub fn get(&self, label: Label) -> Option<usize> {
        self.0.get(&label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, usize)> + '_ {
        self.0.iter().map(|(&l, &b)| (l, b))
    }

    /// Parses `"1=0,2=3"`.
    pub fn parse(text: &str) -> Option<Self> {
        let mut out = Self::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (label, block) = part.split_once('=')?;
            let label: Label = label.trim().parse().ok()?;
            let block: usize = block.trim().parse().ok()?;
            if out.insert(label, block).is_some() {
                return None;
            }
        }
        Some(out)
    }
}

impl FromIterator<(Label, usize)> for AnchorAssignment {
    fn from_iter<T: IntoIterator<Item = (Label, usize)>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Integer ring used by the exact accumulation.
trait Ring: Clone + Send + Sync {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Ring for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        i128::try_from(v).ok()
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Ring for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Visiting order for pattern nodes: pinned nodes first, then greedily the
/// node with most edges into the placed set (ties by id), so partial
/// products hit zero entries early.
fn visiting_order(f: &LabeledMultigraph, pinned: &[Option<usize>]) -> Vec<NodeId> {
    let n = f.node_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for v in 0..n {
        if pinned[v].is_some() {
            placed[v] = true;
            order.push(v);
        }
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| f.multiplicity(u, v) > 0).count();
                (links, std::cmp::Reverse(v))
            })
            .expect("unplaced node exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// One exact evaluation: pattern, pinned blocks, and the integer tables.
struct ExactSum<'a> {
    order: Vec<NodeId>,
    pinned: Vec<Option<usize>>,
    /// For position `p`: (earlier position, multiplicity) of each edge back.
    back: Vec<Vec<(usize, u32)>>,
    candidates: Vec<usize>,
    weights: &'a [BigInt],
    /// `value_pows[m]` = values scaled and raised to `m`, row-major.
    value_pows: &'a BTreeMap<u32, Vec<BigInt>>,
    blocks: usize,
}

/// Scaled block weights and, per multiplicity, scaled value powers.
type Table<T> = (Vec<T>, BTreeMap<u32, Vec<T>>);

impl ExactSum<'_> {
    fn table<T: Ring>(&self) -> Option<Table<T>> {
        let weights = self
            .weights
            .iter()
            .map(T::from_big)
            .collect::<Option<Vec<_>>>()?;
        let mut pows = BTreeMap::new();
        for (&m, table) in self.value_pows {
            pows.insert(
                m,
                table.iter().map(T::from_big).collect::<Option<Vec<_>>>()?,
            );
        }
        Some((weights, pows))
    }

    fn walk<T: Ring>(
        &self,
        pos: usize,
        acc: T,
        assign: &mut [usize],
        weights: &[T],
        pows: &BTreeMap<u32, Vec<T>>,
    ) -> Option<T> {
        if pos == self.order.len() {
            return Some(acc);
        }
        let node = self.order[pos];
        let pinned = self.pinned[node];
        let options: &[usize] = match &pinned {
            Some(b) => std::slice::from_ref(b),
            None => &self.candidates,
        };
        let mut total = T::zero();
        for &b in options {
            let mut f = if pinned.is_some() {
                acc.clone()
            } else {
                acc.mul(&weights[b])?
            };
            for &(earlier, m) in &self.back[pos] {
                if f.is_zero() {
                    break;
                }
                f = f.mul(&pows[&m][assign[earlier] * self.blocks + b])?;
            }
            if f.is_zero() {
                continue;
            }
            assign[pos] = b;
            let sub = self.walk(pos + 1, f, assign, weights, pows)?;
            total = total.add(&sub)?;
        }
        Some(total)
    }

    fn sum_with<T: Ring>(&self, exec: Execution, one: T) -> Option<BigInt> {
        let (weights, pows) = self.table::<T>()?;
        if self.order.is_empty() {
            return Some(one.into_big());
        }
        let first = self.order[0];
        let heads: Vec<usize> = match self.pinned[first] {
            Some(b) => vec![b],
            None => self.candidates.clone(),
        };
        // shard over the first node's block; partial sums are exact, so the
        // reduction order does not matter
        let parts = exec.map_slice(&heads, |&b| {
            let f = if self.pinned[first].is_some() {
                one.clone()
            } else {
                one.mul(&weights[b])?
            };
            if f.is_zero() {
                return Some(T::zero());
            }
            let mut assign = vec![0; self.order.len()];
            assign[0] = b;
            self.walk(1, f, &mut assign, &weights, &pows)
        });
        let mut total = <BigInt as Zero>::zero();
        for p in parts {
            total += p?.into_big();
        }
        Some(total)
    }

    fn sum(&self, exec: Execution) -> BigInt {
        self.sum_with::<i128>(exec, 1)
            .or_else(|| self.sum_with::<BigInt>(exec, BigInt::one()))
            .expect("big integer sum cannot overflow")
    }
}

/// Exact evaluator for densities in finite graphs and step graphons.
#[derive(Debug, Clone, Copy, Default)]
pub struct DensityEngine {
    pub limits: Limits,
    pub execution: Execution,
}

impl DensityEngine {
    pub fn new(limits: Limits, execution: Execution) -> Self {
        Self { limits, execution }
    }

    pub fn sequential() -> Self {
        Self::new(Limits::default(), Execution::Sequential)
    }

    fn check_pattern(&self, f: &LabeledMultigraph) -> Result<(), DensityError> {
        if f.node_count() > self.limits.max_pattern_nodes {
            return Err(DensityError::PatternTooLarge {
                nodes: f.node_count(),
                limit: self.limits.max_pattern_nodes,
            });
        }
        Ok(())
    }

    fn check_budget(&self, blocks: usize, free: usize) -> Result<(), DensityError> {
        let over = DensityError::AssignmentBudget {
            blocks,
            nodes: free,
            budget: self.limits.max_assignments,
        };
        match (blocks as u64).checked_pow(free as u32) {
            Some(n) if n <= self.limits.max_assignments => Ok(()),
            _ => Err(over),
        }
    }

    /// `t(F, G) = hom(F, G) / |V(G)|^|V(F)|`. Parallel edges of `F` collapse
    /// against the 0/1 adjacency of `G`.
    pub fn density_graph(
        &self,
        f: &LabeledMultigraph,
        g: &LabeledMultigraph,
    ) -> Result<Rational, DensityError> {
        self.check_pattern(f)?;
        if !f.is_unlabeled() {
            return Err(DensityError::Labeled("pattern"));
        }
        if !g.is_unlabeled() {
            return Err(DensityError::Labeled("host"));
        }
        if !g.is_simple() {
            return Err(DensityError::HostNotSimple);
        }
        let homs = self.hom_count(f, g);
        let maps = num_traits::pow(BigInt::from(g.node_count()), f.node_count());
        Ok(Rational::new(BigInt::from(homs), maps))
    }

    /// Number of adjacency-preserving maps `V(F) -> V(G)`.
    pub fn hom_count(&self, f: &LabeledMultigraph, g: &LabeledMultigraph) -> u128 {
        let n = g.node_count();
        let mut adj = vec![false; n * n];
        let mut lists = vec![Vec::new(); n];
        for ((u, v), _) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
            lists[u].push(v);
            lists[v].push(u);
        }
        let order = visiting_order(f, &vec![None; f.node_count()]);
        let back: Vec<Vec<usize>> = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                (0..p)
                    .filter(|&q| f.multiplicity(order[q], v) > 0)
                    .collect()
            })
            .collect();
        let all: Vec<usize> = (0..n).collect();

        fn walk(
            pos: usize,
            assign: &mut [usize],
            back: &[Vec<usize>],
            adj: &[bool],
            lists: &[Vec<usize>],
            all: &[usize],
            n: usize,
        ) -> u128 {
            if pos == assign.len() {
                return 1;
            }
            let options: &[usize] = match back[pos].first() {
                Some(&q) => &lists[assign[q]],
                None => all,
            };
            let mut count = 0;
            for &w in options {
                if back[pos].iter().skip(1).all(|&q| adj[assign[q] * n + w]) {
                    assign[pos] = w;
                    count += walk(pos + 1, assign, back, adj, lists, all, n);
                }
            }
            count
        }

        let parts = self.execution.map_range(n, |w| {
            let mut assign = vec![0; order.len()];
            assign[0] = w;
            walk(1, &mut assign, &back, &adj, &lists, &all, n)
        });
        parts.into_iter().sum()
    }

    fn exact_sum(
        &self,
        f: &LabeledMultigraph,
        h: &StepGraphon,
        pinned: Vec<Option<usize>>,
    ) -> Result<Rational, DensityError> {
        self.check_pattern(f)?;
        let blocks = h.num_blocks();
        if blocks > self.limits.max_blocks {
            return Err(DensityError::TooManyBlocks {
                blocks,
                limit: self.limits.max_blocks,
            });
        }
        let free = pinned.iter().filter(|p| p.is_none()).count();
        self.check_budget(blocks, free)?;

        let weight_den = common_denominator(h.weights());
        let value_den = common_denominator(h.values().iter().flatten());
        let weights: Vec<BigInt> = h
            .weights()
            .iter()
            .map(|w| scaled_numerator(w, &weight_den))
            .collect();
        let scaled: Vec<BigInt> = h
            .values()
            .iter()
            .flatten()
            .map(|v| scaled_numerator(v, &value_den))
            .collect();
        let mut value_pows = BTreeMap::new();
        for (_, m) in f.edges() {
            value_pows.entry(m).or_insert_with(|| {
                scaled
                    .iter()
                    .map(|v| num_traits::pow(v.clone(), m as usize))
                    .collect()
            });
        }

        let order = visiting_order(f, &pinned);
        let back = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                (0..p)
                    .filter_map(|q| {
                        let m = f.multiplicity(order[q], v);
                        (m > 0).then_some((q, m))
                    })
                    .collect()
            })
            .collect();
        let sum = ExactSum {
            order,
            pinned,
            back,
            candidates: h.positive_blocks(),
            weights: &weights,
            value_pows: &value_pows,
            blocks,
        };
        let numerator = sum.sum(self.execution);
        let denominator = num_traits::pow(weight_den, free)
            * num_traits::pow(value_den, f.total_multiplicity() as usize);
        Ok(Rational::new(numerator, denominator))
    }

    /// `t(F, H) = sum over maps V(F) -> blocks of prod p_{b_i} prod W_{b_i b_j}^mult`.
    /// Labels of `F` are ignored.
    pub fn density_exact(
        &self,
        f: &LabeledMultigraph,
        h: &StepGraphon,
    ) -> Result<Rational, DensityError> {
        self.exact_sum(f, h, vec![None; f.node_count()])
    }

    /// Density with every labeled node pinned to its anchor block; only the
    /// unlabeled nodes are averaged.
    pub fn anchored_density(
        &self,
        f: &LabeledMultigraph,
        h: &StepGraphon,
        anchors: &AnchorAssignment,
    ) -> Result<Rational, DensityError> {
        if let Some((_, block)) = anchors.iter().find(|&(_, b)| b >= h.num_blocks()) {
            return Err(DensityError::InvalidAnchor {
                block,
                blocks: h.num_blocks(),
            });
        }
        let mut pinned = vec![None; f.node_count()];
        for (&node, &label) in f.labels() {
            let block = anchors
                .get(label)
                .ok_or(DensityError::MissingAnchor(label))?;
            pinned[node] = Some(block);
        }
        self.exact_sum(f, h, pinned)
    }

    /// `sum_x p_x prod_i W(x, a_i)^{k_i}`: the anchored density of the star
    /// with exponents `k` and leaves pinned to `anchors`.
    pub fn mixed_moment(
        &self,
        h: &StepGraphon,
        anchors: &[usize],
        exponents: &[u32],
    ) -> Result<Rational, DensityError> {
        if anchors.len() != exponents.len() {
            return Err(DensityError::LengthMismatch {
                anchors: anchors.len(),
                exponents: exponents.len(),
            });
        }
        if let Some(&block) = anchors.iter().find(|&&a| a >= h.num_blocks()) {
            return Err(DensityError::InvalidAnchor {
                block,
                blocks: h.num_blocks(),
            });
        }
        let mut total = Rational::zero();
        for x in h.positive_blocks() {
            let mut term = h.weight(x).clone();
            for (&a, &k) in anchors.iter().zip(exponents) {
                if term.is_zero() {
                    break;
                }
                term *= pow(h.value(x, a), k);
            }
            total += term;
        }
        debug_assert!(
            exponents.iter().all(|&k| k == 0) || {
                let star = star_multigraph(exponents).expect("positive exponent");
                let pins = (1..=anchors.len() as Label)
                    .zip(anchors.iter().copied())
                    .collect();
                self.anchored_density(&star, h, &pins).ok() == Some(total.clone())
            },
            "mixed moment disagrees with the star construction"
        );
        Ok(total)
    }

    /// Returns `(t(F1 F2, H), sum over label blocks of prod p * t_b(F1) t_b(F2))`.
    pub fn product_identity_check(
        &self,
        f1: &LabeledMultigraph,
        f2: &LabeledMultigraph,
        h: &StepGraphon,
    ) -> Result<(Rational, Rational), DensityError> {
        let labels = f1.label_set();
        if labels != f2.label_set() {
            return Err(DensityError::LabelMismatch(labels, f2.label_set()));
        }
        if labels.len() > self.limits.max_identity_labels {
            return Err(DensityError::TooManyLabels {
                labels: labels.len(),
                limit: self.limits.max_identity_labels,
            });
        }
        let lhs = self.density_exact(&f1.product(f2).unlabeled(), h)?;

        let blocks = h.num_blocks();
        let mut rhs = Rational::zero();
        let mut tuple = vec![0usize; labels.len()];
        loop {
            let weight: Rational = tuple.iter().map(|&b| h.weight(b).clone()).product();
            if !weight.is_zero() {
                let anchors: AnchorAssignment =
                    labels.iter().copied().zip(tuple.iter().copied()).collect();
                let a = self.anchored_density(f1, h, &anchors)?;
                if !a.is_zero() {
                    rhs += weight * a * self.anchored_density(f2, h, &anchors)?;
                }
            }
            // odometer over blocks^k
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if tuple[i] < blocks {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
        Ok((lhs, rhs))
    }

    /// Mean of `prod W(X_i, X_j)^mult` over `samples` uniform draws of the
    /// node coordinates. Coordinate of node `i` in sample `s` is draw `s` of
    /// stream `i`; batches are reduced in order, so the result does not
    /// depend on the execution strategy.
    pub fn density_mc(
        &self,
        f: &LabeledMultigraph,
        kernel: &BlackBoxKernel,
        samples: u64,
        seed: u64,
    ) -> Result<Estimate, DensityError> {
        const BATCH: u64 = 4096;
        if samples < 2 {
            return Err(DensityError::TooFewSamples);
        }
        let streams = Streams::new(seed);
        let k = f.node_count();
        let edges: Vec<((usize, usize), i32)> = f.edges().map(|(p, m)| (p, m as i32)).collect();
        let batches = samples.div_ceil(BATCH) as usize;
        let parts = self.execution.map_range(batches, |b| {
            let start = b as u64 * BATCH;
            let len = BATCH.min(samples - start) as usize;
            let mut coords = vec![0u64; k * len];
            for node in 0..k {
                streams.fill(
                    node as u64,
                    start,
                    &mut coords[node * len..(node + 1) * len],
                );
            }
            let mut acc = Moments::default();
            for s in 0..len {
                let x = |node: usize| crate::rng::bits_to_unit(coords[node * len + s]);
                let mut value = 1.0;
                for &((u, v), m) in &edges {
                    value *= kernel.eval(x(u), x(v)).powi(m);
                }
                acc.push(value);
            }
            acc
        });
        let total = parts
            .into_iter()
            .fold(Moments::default(), |a, b| a.merge(&b));
        Ok(total.estimate())
    }
}

/// Running count, mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(&self, other: &Self) -> Self {
        if self.n == 0 {
            return *other;
        }
        if other.n == 0 {
            return *self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let mean = self.mean + delta * other.n as f64 / n as f64;
        let m2 = self.m2 + other.m2 + delta * delta * (self.n as f64 * other.n as f64) / n as f64;
        Self { n, mean, m2 }
    }

    fn estimate(&self) -> Estimate {
        let variance = if self.n > 1 {
            self.m2 / (self.n - 1) as f64
        } else {
            0.0
        };
        Estimate {
            mean: self.mean,
            stderr: (variance.max(0.0) / self.n as f64).sqrt(),
            samples: self.n,
        }
    }
}

pub fn density_graph(
    f: &LabeledMultigraph,
    g: &LabeledMultigraph,
) -> Result<Rational, DensityError> {
    DensityEngine::default().density_graph(f, g)
}

pub fn density_exact(f: &LabeledMultigraph, h: &StepGraphon) -> Result<Rational, DensityError> {
    DensityEngine::default().density_exact(f, h)
}

pub fn anchored_density(
    f: &LabeledMultigraph,
    h: &StepGraphon,
    anchors: &AnchorAssignment,
) -> Result<Rational, DensityError> {
    DensityEngine::default().anchored_density(f, h, anchors)
}

pub fn mixed_moment(
    h: &StepGraphon,
    anchors: &[usize],
    exponents: &[u32],
) -> Result<Rational, DensityError> {
    DensityEngine::default().mixed_moment(h, anchors, exponents)
}

pub fn product_identity_check(
    f1: &LabeledMultigraph,
    f2: &LabeledMultigraph,
    h: &StepGraphon,
) -> Result<(Rational, Rational), DensityError> {
    DensityEngine::default().product_identity_check(f1, f2, h)
}

pub fn density_mc(
    f: &LabeledMultigraph,
    kernel: &BlackBoxKernel,
    samples: u64,
    seed: u64,
) -> Result<Estimate, DensityError> {
    DensityEngine::default().density_mc(f, kernel, samples, seed)
}
