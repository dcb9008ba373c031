//! Couplings of block measures that align two weakly isomorphic graphons.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::common_quotient;
use crate::graphon::StepGraphon;
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

#[derive(Debug, Error)]
pub enum CouplingIoError {
    #[error("malformed coupling file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("coupling shape does not match: expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize },
    #[error("negative mass at ({0}, {1})")]
    Negative(usize, usize),
}

/// Joint distribution on (blocks of H1) x (blocks of H2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingMatrix {
    masses: Vec<Vec<Rational>>,
    cols: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CouplingFile {
    rows: usize,
    cols: usize,
    masses: Vec<Vec<String>>,
}

impl CouplingMatrix {
    pub fn new(masses: Vec<Vec<Rational>>) -> Result<Self, CouplingIoError> {
        let cols = masses.first().map_or(0, Vec::len);
        if masses.iter().any(|r| r.len() != cols) {
            return Err(CouplingIoError::Shape {
                rows: masses.len(),
                cols,
            });
        }
        for (i, row) in masses.iter().enumerate() {
            if let Some(j) = row.iter().position(|m| m.is_negative()) {
                return Err(CouplingIoError::Negative(i, j));
            }
        }
        Ok(Self { masses, cols })
    }

    pub fn rows(&self) -> usize {
        self.masses.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mass(&self, i: usize, j: usize) -> &Rational {
        &self.masses[i][j]
    }

    pub fn masses(&self) -> &[Vec<Rational>] {
        &self.masses
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.masses.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<Rational> {
        (0..self.cols)
            .map(|j| self.masses.iter().map(|r| &r[j]).sum())
            .collect()
    }

    /// Row sums equal the weights of `h1` and column sums those of `h2`.
    pub fn has_marginals(&self, h1: &StepGraphon, h2: &StepGraphon) -> bool {
        self.row_sums() == h1.weights() && self.col_sums() == h2.weights()
    }

    /// First pair of positive-mass cells `(i, j), (k, l)` with
    /// `W1[i][k] != W2[j][l]`.
    pub fn support_violation(
        &self,
        h1: &StepGraphon,
        h2: &StepGraphon,
    ) -> Option<((usize, usize), (usize, usize))> {
        let support: Vec<(usize, usize)> = (0..self.rows())
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.masses[i][j].is_zero())
            .collect();
        for &(i, j) in &support {
            for &(k, l) in &support {
                if h1.value(i, k) != h2.value(j, l) {
                    return Some(((i, j), (k, l)));
                }
            }
        }
        None
    }

    pub fn from_json(text: &str) -> Result<Self, CouplingIoError> {
        let file: CouplingFile = serde_json::from_str(text)?;
        let masses = file
            .masses
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>, _>>()?;
        let shape_ok = masses.len() == file.rows && masses.iter().all(|r| r.len() == file.cols);
        if !shape_ok {
            return Err(CouplingIoError::Shape {
                rows: file.rows,
                cols: file.cols,
            });
        }
        let mut out = Self::new(masses)?;
        out.cols = file.cols;
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let file = CouplingFile {
            rows: self.rows(),
            cols: self.cols,
            masses: self
                .masses
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("plain data serializes");
        out.push('\n');
        out
    }
}

/// Product-within-class coupling: blocks `i` of H1 and `j` of H2 that map to
/// the same class `c` of the common quotient get mass `p_i p'_j / q_c`.
/// `None` when the graphons are not weakly isomorphic.
pub fn build_coupling(h1: &StepGraphon, h2: &StepGraphon) -> Option<CouplingMatrix> {
    let cq = common_quotient(h1, h2)?;
    let class_weight = cq.quotient.weights();
    let masses = (0..h1.num_blocks())
        .map(|i| {
            (0..h2.num_blocks())
                .map(|j| match (cq.map1[i], cq.map2[j]) {
                    (Some(a), Some(b)) if a == b => h1.weight(i) * h2.weight(j) / &class_weight[a],
                    _ => Rational::zero(),
                })
                .collect()
        })
        .collect();
    Some(CouplingMatrix::new(masses).expect("masses are nonnegative and rectangular"))
}
