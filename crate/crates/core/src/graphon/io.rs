//! JSON graphon files.
//!
//! ```json
//! {"weights": ["1/2", "1/2"], "values": [["0", "1"], ["1", "0"]], "range": ["0", "1"]}
//! ```
//!
//! Rationals are strings `"p/q"` (or `"p"`). The writer emits lowest terms
//! and mirrors the lower triangle of the matrix.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{GraphonError, StepGraphon, ValueRange};
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

#[derive(Debug, Error)]
pub enum GraphonIoError {
    #[error("malformed graphon file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("invalid graphon: {0}")]
    Invalid(#[from] GraphonError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphonFile {
    weights: Vec<String>,
    values: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    range: Option<[String; 2]>,
}

fn parse_all(items: &[String]) -> Result<Vec<Rational>, ParseRationalError> {
    items.iter().map(|s| parse_rational(s)).collect()
}

impl StepGraphon {
    pub fn from_json(text: &str) -> Result<Self, GraphonIoError> {
        let file: GraphonFile = serde_json::from_str(text)?;
        let weights = parse_all(&file.weights)?;
        let values = file
            .values
            .iter()
            .map(|row| parse_all(row))
            .collect::<Result<Vec<_>, _>>()?;
        let range = match &file.range {
            Some([lo, hi]) => ValueRange::new(parse_rational(lo)?, parse_rational(hi)?)?,
            None => ValueRange::default(),
        };
        Ok(Self::with_range(weights, values, range)?)
    }

    pub fn to_json(&self) -> String {
        let n = self.num_blocks();
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| format_rational(self.value(i.max(j), i.min(j))))
                    .collect()
            })
            .collect();
        let range = (!self.range().is_unit()).then(|| {
            [
                format_rational(&self.range().lo),
                format_rational(&self.range().hi),
            ]
        });
        let file = GraphonFile {
            weights: self.weights().iter().map(format_rational).collect(),
            values,
            range,
        };
        let mut out = serde_json::to_string_pretty(&file).expect("plain strings serialize");
        out.push('\n');
        out
    }
}
