//! Step graphons: block weights plus a symmetric matrix of block values.
//!
//! A [`StepGraphon`] is realized on `[0, 1)` by laying the blocks out as
//! consecutive half-open intervals `[c_{i-1}, c_i)` where `c_i` is the
//! cumulative weight of the first `i` blocks. Zero-weight blocks get empty
//! intervals.

mod io;
mod kernel;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::LabeledMultigraph;
use crate::rational::{format_rational, Rational};

pub use io::GraphonIoError;
pub use kernel::{BlackBoxKernel, KernelCheckError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphonError {
    #[error("a graphon needs at least one block")]
    Empty,
    #[error("value matrix row {row} has length {found}, expected {expected}")]
    DimensionMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("block {0} has negative weight")]
    NegativeWeight(usize),
    #[error("weights sum to {0}, not 1")]
    WeightSum(String),
    #[error("values[{0}][{1}] differs from values[{1}][{0}]")]
    Asymmetric(usize, usize),
    #[error("values[{i}][{j}] = {value} lies outside [{lo}, {hi}]")]
    OutOfRange {
        i: usize,
        j: usize,
        value: String,
        lo: String,
        hi: String,
    },
    #[error("declared range is empty (lo > hi)")]
    InvalidRange,
    #[error("expected a simple unlabeled graph")]
    NotSimple,
    #[error("affine rescale needs a nonzero scale")]
    ZeroScale,
    #[error("coordinate {0} lies outside [0, 1)")]
    OutOfDomain(f64),
}

/// Closed interval every block value must lie in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueRange {
    pub lo: Rational,
    pub hi: Rational,
}

impl ValueRange {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, GraphonError> {
        if lo > hi {
            return Err(GraphonError::InvalidRange);
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    pub fn is_unit(&self) -> bool {
        self.lo.is_zero() && self.hi.is_one()
    }

    /// Whether this range lies inside `[0, 1]`.
    pub fn within_unit(&self) -> bool {
        !self.lo.is_negative() && self.hi <= Rational::one()
    }
}

impl Default for ValueRange {
    fn default() -> Self {
        Self {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }
}

/// Checks the raw parts of a step graphon; every constructor goes through it.
pub fn validate(
    weights: &[Rational],
    values: &[Vec<Rational>],
    range: &ValueRange,
) -> Result<(), GraphonError> {
    let n = weights.len();
    if n == 0 {
        return Err(GraphonError::Empty);
    }
    if values.len() != n {
        return Err(GraphonError::DimensionMismatch {
            row: values.len().min(n),
            expected: n,
            found: values.len(),
        });
    }
    for (row, r) in values.iter().enumerate() {
        if r.len() != n {
            return Err(GraphonError::DimensionMismatch {
                row,
                expected: n,
                found: r.len(),
            });
        }
    }
    if let Some(block) = weights.iter().position(|w| w.is_negative()) {
        return Err(GraphonError::NegativeWeight(block));
    }
    let sum: Rational = weights.iter().sum();
    if !sum.is_one() {
        return Err(GraphonError::WeightSum(format_rational(&sum)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if values[i][j] != values[j][i] {
                return Err(GraphonError::Asymmetric(i, j));
            }
        }
    }
    for (i, row) in values.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !range.contains(v) {
                return Err(GraphonError::OutOfRange {
                    i,
                    j,
                    value: format_rational(v),
                    lo: format_rational(&range.lo),
                    hi: format_rational(&range.hi),
                });
            }
        }
    }
    Ok(())
}

/// Finite, exactly computable graphon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepGraphon {
    weights: Vec<Rational>,
    values: Vec<Vec<Rational>>,
    range: ValueRange,
}

impl StepGraphon {
    /// Validated graphon with values in `[0, 1]`.
    pub fn new(weights: Vec<Rational>, values: Vec<Vec<Rational>>) -> Result<Self, GraphonError> {
        Self::with_range(weights, values, ValueRange::default())
    }

    pub fn with_range(
        weights: Vec<Rational>,
        values: Vec<Vec<Rational>>,
        range: ValueRange,
    ) -> Result<Self, GraphonError> {
        validate(&weights, &values, &range)?;
        Ok(Self {
            weights,
            values,
            range,
        })
    }

    /// Step graphon of a simple graph: one block of weight `1/n` per node.
    pub fn from_graph(g: &LabeledMultigraph) -> Result<Self, GraphonError> {
        if !g.is_simple() || !g.is_unlabeled() {
            return Err(GraphonError::NotSimple);
        }
        let n = g.node_count();
        let weight = Rational::new(BigInt::one(), BigInt::from(n));
        let mut values = vec![vec![Rational::zero(); n]; n];
        for ((u, v), _) in g.edges() {
            values[u][v] = Rational::one();
            values[v][u] = Rational::one();
        }
        Self::new(vec![weight; n], values)
    }

    /// One block with value `c`; `c` must lie in `[0, 1]`.
    pub fn constant(c: Rational) -> Result<Self, GraphonError> {
        Self::new(vec![Rational::one()], vec![vec![c]])
    }

    /// Constant graphon with an explicit value range.
    pub fn constant_in(c: Rational, range: ValueRange) -> Result<Self, GraphonError> {
        Self::with_range(vec![Rational::one()], vec![vec![c]], range)
    }

    pub fn num_blocks(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, block: usize) -> &Rational {
        &self.weights[block]
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn value(&self, i: usize, j: usize) -> &Rational {
        &self.values[i][j]
    }

    pub fn range(&self) -> &ValueRange {
        &self.range
    }

    /// Blocks of positive weight, in order.
    pub fn positive_blocks(&self) -> Vec<usize> {
        (0..self.num_blocks())
            .filter(|&b| self.weights[b].is_positive())
            .collect()
    }

    /// Pull-back along `x -> kx mod 1`: every block becomes `k` consecutive
    /// copies of a `k`-th of its weight.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn blowup(&self, k: usize) -> Self {
        assert!(k >= 1, "blowup factor must be positive");
        let n = self.num_blocks();
        let kq = Rational::from_integer(BigInt::from(k));
        let weights = (0..n * k).map(|b| &self.weights[b / k] / &kq).collect();
        let values = (0..n * k)
            .map(|a| {
                (0..n * k)
                    .map(|b| self.values[a / k][b / k].clone())
                    .collect()
            })
            .collect();
        Self {
            weights,
            values,
            range: self.range.clone(),
        }
    }

    /// Values mapped through `v -> a v + b`, with the range mapped alongside.
    pub fn affine_rescale(&self, a: &Rational, b: &Rational) -> Result<Self, GraphonError> {
        if a.is_zero() {
            return Err(GraphonError::ZeroScale);
        }
        let map = |v: &Rational| a * v + b;
        let (lo, hi) = (map(&self.range.lo), map(&self.range.hi));
        let range = if lo <= hi {
            ValueRange { lo, hi }
        } else {
            ValueRange { lo: hi, hi: lo }
        };
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(map).collect())
            .collect();
        Ok(Self {
            weights: self.weights.clone(),
            values,
            range,
        })
    }

    /// Blocks reordered so that new block `p` is old block `order[p]`.
    pub fn permute(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.num_blocks());
        Self {
            weights: order.iter().map(|&b| self.weights[b].clone()).collect(),
            values: order
                .iter()
                .map(|&a| order.iter().map(|&b| self.values[a][b].clone()).collect())
                .collect(),
            range: self.range.clone(),
        }
    }

    /// Cumulative weights `c_1, ..., c_n` (so `c_n = 1`).
    pub fn cumulative_weights(&self) -> Vec<Rational> {
        self.weights
            .iter()
            .scan(Rational::zero(), |acc, w| {
                *acc += w;
                Some(acc.clone())
            })
            .collect()
    }

    /// Block whose interval `[c_{i-1}, c_i)` contains `x`.
    pub fn block_of(&self, x: f64) -> Result<usize, GraphonError> {
        if !(0.0..1.0).contains(&x) {
            return Err(GraphonError::OutOfDomain(x));
        }
        let x = Rational::from_float(x).ok_or(GraphonError::OutOfDomain(x))?;
        let cum = self.cumulative_weights();
        Ok(cum.partition_point(|c| *c <= x))
    }

    /// `W(x, y)` of the interval realization.
    pub fn evaluate(&self, x: f64, y: f64) -> Result<Rational, GraphonError> {
        let (i, j) = (self.block_of(x)?, self.block_of(y)?);
        Ok(self.values[i][j].clone())
    }

    /// Weighted average of all values, `sum p_i p_j W_ij`.
    pub fn edge_density(&self) -> Rational {
        let mut total = Rational::zero();
        for (i, row) in self.values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                total += &self.weights[i] * &self.weights[j] * v;
            }
        }
        total
    }
}

/// Graphon with values `0`/`1`, mostly for tests and examples.
pub fn bipartite() -> StepGraphon {
    StepGraphon::from_graph(&LabeledMultigraph::complete(2)).expect("K2 is simple")
}
