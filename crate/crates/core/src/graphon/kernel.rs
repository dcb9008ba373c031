use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;
use thiserror::Error;

use super::StepGraphon;
use crate::rational::{to_f64, Rational};
use crate::rng::Streams;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelCheckError {
    #[error("kernel is not symmetric at ({x}, {y}): {a} vs {b}")]
    Asymmetric { x: f64, y: f64, a: f64, b: f64 },
    #[error("kernel value {value} at ({x}, {y}) exceeds the bound {bound}")]
    Unbounded {
        x: f64,
        y: f64,
        value: f64,
        bound: f64,
    },
}

type Evaluator = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// Symmetric bounded kernel on `[0, 1)^2`, known only through evaluation.
/// Used for Monte Carlo estimates; never for exact decisions.
#[derive(Clone)]
pub struct BlackBoxKernel {
    evaluator: Arc<Evaluator>,
    bound: f64,
}

impl fmt::Debug for BlackBoxKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlackBoxKernel")
            .field("bound", &self.bound)
            .finish_non_exhaustive()
    }
}

/// Smallest `f64` that is `>= c`, so that `x < c` iff `x < ceil_f64(c)`
/// for every float `x`.
fn ceil_f64(c: &Rational) -> f64 {
    let f = c.to_f64().unwrap_or(f64::INFINITY);
    match Rational::from_float(f) {
        Some(back) if back < *c => f.next_up(),
        _ => f,
    }
}

impl BlackBoxKernel {
    pub fn new(evaluator: impl Fn(f64, f64) -> f64 + Send + Sync + 'static, bound: f64) -> Self {
        Self {
            evaluator: Arc::new(evaluator),
            bound,
        }
    }

    /// Float realization of [`StepGraphon::evaluate`]. Block lookup uses
    /// exact float thresholds, so it agrees with the exact interval layout
    /// for every input.
    pub fn from_step(h: &StepGraphon) -> Self {
        let mut thresholds: Vec<f64> = h.cumulative_weights().iter().map(ceil_f64).collect();
        thresholds.pop();
        let n = h.num_blocks();
        let values: Vec<f64> = h.values().iter().flatten().map(to_f64).collect();
        let bound = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let block = move |x: f64| thresholds.partition_point(|&t| t <= x);
        Self::new(move |x, y| values[block(x) * n + block(y)], bound)
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.evaluator)(x, y)
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    /// Spot-checks symmetry and the bound on `samples` seeded random points.
    pub fn spot_check(&self, samples: usize, seed: u64) -> Result<(), KernelCheckError> {
        let mut cursor = Streams::new(seed).positioned(0, 0);
        for _ in 0..samples {
            let (x, y) = (cursor.next_unit(), cursor.next_unit());
            let (a, b) = (self.eval(x, y), self.eval(y, x));
            if a != b {
                return Err(KernelCheckError::Asymmetric { x, y, a, b });
            }
            if a.abs() > self.bound {
                return Err(KernelCheckError::Unbounded {
                    x,
                    y,
                    value: a,
                    bound: self.bound,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn step_kernel_matches_exact_layout() {
        let h = StepGraphon::new(
            vec![ratio(1, 3), ratio(0, 1), ratio(1, 6), ratio(1, 2)],
            vec![
                vec![ratio(1, 7), ratio(0, 1), ratio(1, 2), ratio(1, 1)],
                vec![ratio(0, 1), ratio(1, 1), ratio(1, 3), ratio(0, 1)],
                vec![ratio(1, 2), ratio(1, 3), ratio(0, 1), ratio(2, 3)],
                vec![ratio(1, 1), ratio(0, 1), ratio(2, 3), ratio(1, 5)],
            ],
        )
        .unwrap();
        let k = BlackBoxKernel::from_step(&h);
        // boundaries and their float neighbours
        let mut probes = vec![
            0.0,
            0.5,
            1.0 / 3.0,
            0.5f64.next_down(),
            (1.0f64 / 3.0).next_up(),
        ];
        probes.push((1.0f64 / 3.0).next_down());
        let mut cursor = Streams::new(3).positioned(0, 0);
        probes.extend((0..200).map(|_| cursor.next_unit()));
        for &x in &probes {
            for &y in &probes {
                assert_eq!(
                    k.eval(x, y),
                    to_f64(&h.evaluate(x, y).unwrap()),
                    "at ({x}, {y})"
                );
            }
        }
        assert_eq!(k.spot_check(1000, 1), Ok(()));
        assert_eq!(k.bound(), 1.0);
    }

    #[test]
    fn spot_check_flags_asymmetry() {
        let k = BlackBoxKernel::new(|x, y| x - y, 1.0);
        assert!(matches!(
            k.spot_check(10, 0),
            Err(KernelCheckError::Asymmetric { .. })
        ));
        let k = BlackBoxKernel::new(|x, y| 10.0 * x * y, 1.0);
        assert!(matches!(
            k.spot_check(100, 0),
            Err(KernelCheckError::Unbounded { .. })
        ));
    }
}
