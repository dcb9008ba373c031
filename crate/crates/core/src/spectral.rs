//! Spectrum of the kernel operator of a step graphon.
//!
//! The operator `f -> sum_j p_j W_ij f_j` has the same spectrum as the
//! symmetric matrix `M = D^{1/2} W D^{1/2}` with `D = diag(p)`, which is
//! diagonalized here by cyclic Jacobi rotations.

use num_traits::Zero;
use thiserror::Error;

use crate::density::{AnchorAssignment, DensityEngine, DensityError};
use crate::graph::{GraphError, LabeledMultigraph};
use crate::graphon::StepGraphon;
use crate::rational::{to_f64, Rational};
use crate::reduce::weak_iso;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 50;
pub const SYMMETRY_TOLERANCE: f64 = 1e-14;
/// Eigenvalues closer than this are grouped when comparing coefficient sums.
pub const GROUPING_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("Jacobi iteration did not converge; off-diagonal norm {residual:e}")]
    NoConvergence { residual: f64 },
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("path length must be at least 1")]
    EmptyPath,
    #[error("block {block} out of range for {blocks} blocks")]
    InvalidBlock { block: usize, blocks: usize },
    #[error(transparent)]
    Density(#[from] DensityError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        for i in 0..n {
            for j in i + 1..n {
                if (data[i * n + j] - data[j * n + i]).abs() > SYMMETRY_TOLERANCE {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.data[i * self.n + j].powi(2);
                }
            }
        }
        s.sqrt()
    }
}

/// `D^{1/2} W D^{1/2}` in floating point.
pub fn kernel_matrix(h: &StepGraphon) -> SymmetricMatrix {
    let n = h.num_blocks();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let scale = to_f64(&(h.weight(i) * h.weight(j))).sqrt();
            let x = scale * to_f64(h.value(i, j));
            data[i * n + j] = x;
            data[j * n + i] = x;
        }
    }
    SymmetricMatrix { n, data }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted by decreasing absolute value (positive first on ties).
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector of `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Off-diagonal Frobenius norm when the iteration stopped.
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn power_sum(&self, k: u32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k as i32)).sum()
    }

    /// Largest entry of `|V^T V - I|`.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, u) in self.eigenvectors.iter().enumerate() {
            for (b, v) in self.eigenvectors.iter().enumerate() {
                let dot: f64 = u.iter().zip(v).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Cyclic Jacobi until the off-diagonal norm drops below `tol` or
/// [`MAX_SWEEPS`] sweeps have run.
pub fn eigendecompose(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    let n = m.n;
    let mut a = m.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut sweeps = 0;
    let mut residual = a.off_diagonal_norm();
    while residual >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { residual });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a.data[p * n + p], a.data[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let (arp, arq) = (a.data[r * n + p], a.data[r * n + q]);
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a.data[r * n + p] = new_rp;
                    a.data[p * n + r] = new_rp;
                    a.data[r * n + q] = new_rq;
                    a.data[q * n + r] = new_rq;
                }
                a.data[p * n + p] = app - t * apq;
                a.data[q * n + q] = aqq + t * apq;
                a.data[p * n + q] = 0.0;
                a.data[q * n + p] = 0.0;
                for r in 0..n {
                    let (vrp, vrq) = (v[r * n + p], v[r * n + q]);
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
        residual = a.off_diagonal_norm();
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag = |k: usize| a.data[k * n + k];
    order.sort_by(|&x, &y| {
        diag(y)
            .abs()
            .total_cmp(&diag(x).abs())
            .then(diag(y).total_cmp(&diag(x)))
    });
    Ok(Spectrum {
        eigenvalues: order.iter().map(|&k| diag(k)).collect(),
        eigenvectors: order
            .iter()
            .map(|&k| (0..n).map(|r| v[r * n + k]).collect())
            .collect(),
        residual,
        sweeps,
    })
}

/// Spectrum of the kernel operator of `h`.
pub fn spectrum(h: &StepGraphon) -> Result<Spectrum, SpectralError> {
    eigendecompose(&kernel_matrix(h), DEFAULT_TOLERANCE)
}

/// `t(C_k, H)` as the power sum of the kernel eigenvalues.
pub fn cycle_density_spectral(h: &StepGraphon, k: usize) -> Result<f64, SpectralError> {
    if k < 3 {
        return Err(SpectralError::CycleTooShort(k));
    }
    Ok(spectrum(h)?.power_sum(k as u32))
}

/// `t_ij(P_{k+1}, H)`: entry `(i, j)` of `(W D)^{k-1} W`, exactly.
pub fn path_operator_entry(
    h: &StepGraphon,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Rational, SpectralError> {
    let n = h.num_blocks();
    for block in [i, j] {
        if block >= n {
            return Err(SpectralError::InvalidBlock { block, blocks: n });
        }
    }
    if k == 0 {
        return Err(SpectralError::EmptyPath);
    }
    let mut row: Vec<Rational> = h.values()[i].clone();
    for _ in 1..k {
        let scaled: Vec<Rational> = row.iter().zip(h.weights()).map(|(r, p)| r * p).collect();
        row = (0..n)
            .map(|c| {
                scaled
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(m, s)| s * h.value(m, c))
                    .sum()
            })
            .collect();
    }
    Ok(row.swap_remove(j))
}

/// Path on `k + 1` nodes with its endpoints labeled 1 and 2.
pub fn labeled_path(k: usize) -> LabeledMultigraph {
    LabeledMultigraph::path(k + 1)
        .labeled(&[(0, 1), (k, 2)])
        .expect("distinct endpoints")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionRow {
    /// The chosen edge is replaced by a path with `k` edges.
    pub k: usize,
    pub nodes: usize,
    /// `None` when the subdivided graph exceeds the node budget.
    pub densities: Option<(Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientGroup {
    pub eigenvalue: f64,
    pub sum1: f64,
    pub sum2: f64,
}

/// Side-by-side check that two graphons agree on a multigraph once they
/// agree on its simple subdivisions, with the spectral coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionReport {
    pub weakly_isomorphic: bool,
    pub density1: Rational,
    pub density2: Rational,
    /// Edge whose copy gets subdivided, if `F` has an edge.
    pub pair: Option<(usize, usize)>,
    pub subdivisions: Vec<SubdivisionRow>,
    /// Eigenvalues of both kernels grouped within [`GROUPING_TOLERANCE`],
    /// with the summed coefficients `a_n` and `b_n` of each group.
    pub groups: Vec<CoefficientGroup>,
    /// `sum_n a_n lambda_n` and `sum_n b_n mu_n`.
    pub spectral_density1: f64,
    pub spectral_density2: f64,
}

impl SubdivisionReport {
    pub fn densities_equal(&self) -> bool {
        self.density1 == self.density2
    }

    pub fn subdivisions_equal(&self) -> bool {
        self.subdivisions
            .iter()
            .filter_map(|r| r.densities.as_ref())
            .all(|(a, b)| a == b)
    }

    /// Spectral reconstructions match the exact densities within `tol`.
    pub fn spectral_consistent(&self, tol: f64) -> bool {
        (self.spectral_density1 - to_f64(&self.density1)).abs() < tol
            && (self.spectral_density2 - to_f64(&self.density2)).abs() < tol
    }

    /// Coefficient sums agree on every nonzero eigenvalue group. The zero
    /// group is multiplied by `0^k` and is not constrained.
    pub fn groups_match(&self, tol: f64) -> bool {
        self.groups
            .iter()
            .filter(|g| g.eigenvalue.abs() > GROUPING_TOLERANCE)
            .all(|g| (g.sum1 - g.sum2).abs() < tol)
    }

    pub fn all_checks_pass(&self) -> bool {
        self.weakly_isomorphic
            && self.densities_equal()
            && self.subdivisions_equal()
            && self.spectral_consistent(1e-9)
            && self.groups_match(1e-8)
    }

    /// The pair is shown to be inequivalent by this report.
    pub fn flags_non_equivalent(&self) -> bool {
        !self.densities_equal() || !self.subdivisions_equal()
    }
}

fn coefficients(h: &StepGraphon, spec: &Spectrum, trace: &[Vec<Rational>]) -> Vec<f64> {
    let n = h.num_blocks();
    let root: Vec<f64> = h.weights().iter().map(|w| to_f64(w).sqrt()).collect();
    spec.eigenvectors
        .iter()
        .map(|u| {
            let mut a = 0.0;
            for i in 0..n {
                for j in 0..n {
                    a += root[i] * root[j] * u[i] * u[j] * to_f64(&trace[i][j]);
                }
            }
            a
        })
        .collect()
}

fn group(spec1: &Spectrum, a: &[f64], spec2: &Spectrum, b: &[f64]) -> Vec<CoefficientGroup> {
    let mut items: Vec<(f64, f64, bool)> = spec1
        .eigenvalues
        .iter()
        .zip(a)
        .map(|(&l, &c)| (l, c, true))
        .chain(
            spec2
                .eigenvalues
                .iter()
                .zip(b)
                .map(|(&l, &c)| (l, c, false)),
        )
        .collect();
    items.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut groups: Vec<CoefficientGroup> = Vec::new();
    let mut anchor = f64::NEG_INFINITY;
    for (l, c, first) in items {
        if groups.is_empty() || l - anchor > GROUPING_TOLERANCE {
            anchor = l;
            groups.push(CoefficientGroup {
                eigenvalue: l,
                sum1: 0.0,
                sum2: 0.0,
            });
        }
        let g = groups.last_mut().expect("pushed above");
        if first {
            g.sum1 += c;
        } else {
            g.sum2 += c;
        }
    }
    groups
}

/// Runs the multigraph-from-simple pipeline for `F` on `h1` and `h2`.
/// Labels of `F` are ignored. Subdivided graphs with more than
/// `max_simple_nodes` nodes are listed without densities.
pub fn multigraph_from_simple_check(
    h1: &StepGraphon,
    h2: &StepGraphon,
    f: &LabeledMultigraph,
    max_simple_nodes: usize,
) -> Result<SubdivisionReport, SpectralError> {
    let engine = DensityEngine::default();
    let f = f.unlabeled();
    let density1 = engine.density_exact(&f, h1)?;
    let density2 = engine.density_exact(&f, h2)?;
    let pair = f
        .edges()
        .find(|&(_, m)| m >= 2)
        .or_else(|| f.edges().next())
        .map(|(p, _)| p);

    let mut subdivisions = Vec::new();
    let mut groups = Vec::new();
    let (spectral_density1, spectral_density2);
    if let Some((u, v)) = pair {
        for k in 2..=6 {
            let fk = f.subdivide_edge(u, v, k - 1)?;
            let densities = if fk.node_count() <= max_simple_nodes {
                Some((
                    engine.density_exact(&fk, h1)?,
                    engine.density_exact(&fk, h2)?,
                ))
            } else {
                None
            };
            subdivisions.push(SubdivisionRow {
                k,
                nodes: fk.node_count(),
                densities,
            });
        }

        // F' = F minus one copy of uv, endpoints labeled 1 and 2
        let mut remaining: Vec<u32> = f.edges().map(|(_, m)| m).collect();
        let idx = f
            .edges()
            .position(|(p, _)| p == (u, v))
            .expect("pair is an edge");
        remaining[idx] -= 1;
        let rest = f
            .with_multiplicities(&remaining)
            .labeled(&[(u, 1), (v, 2)])?;
        let trace_for = |h: &StepGraphon| -> Result<Vec<Vec<Rational>>, SpectralError> {
            let n = h.num_blocks();
            let mut t = vec![vec![Rational::zero(); n]; n];
            for (i, row) in t.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    let pins = AnchorAssignment::new().with(1, i).with(2, j);
                    *slot = engine.anchored_density(&rest, h, &pins)?;
                }
            }
            Ok(t)
        };
        let (s1, s2) = (spectrum(h1)?, spectrum(h2)?);
        let a = coefficients(h1, &s1, &trace_for(h1)?);
        let b = coefficients(h2, &s2, &trace_for(h2)?);
        spectral_density1 = s1.eigenvalues.iter().zip(&a).map(|(l, c)| l * c).sum();
        spectral_density2 = s2.eigenvalues.iter().zip(&b).map(|(l, c)| l * c).sum();
        groups = group(&s1, &a, &s2, &b);
    } else {
        spectral_density1 = to_f64(&density1);
        spectral_density2 = to_f64(&density2);
    }

    Ok(SubdivisionReport {
        weakly_isomorphic: weak_iso(h1, h2).is_isomorphic(),
        density1,
        density2,
        pair,
        subdivisions,
        groups,
        spectral_density1,
        spectral_density2,
    })
}
