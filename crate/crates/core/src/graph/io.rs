//! Plain-text graph files.
//!
//! ```text
//! n m
//! u v [mult]      (m lines, 0-based ids, mult defaults to 1)
//! label node lbl  (optional, any number)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Repeated pairs add up.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{GraphError, LabeledMultigraph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseGraphError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: loop at node {node}")]
    Loop { line: usize, node: NodeId },
    #[error("line {line}: label {label} used twice")]
    DuplicateLabel { line: usize, label: u64 },
    #[error("line {line}: node {node} already labeled")]
    NodeAlreadyLabeled { line: usize, node: NodeId },
    #[error("line {line}: node {node} out of range for {node_count} nodes")]
    NodeOutOfRange {
        line: usize,
        node: NodeId,
        node_count: usize,
    },
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseGraphError {
    ParseGraphError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn lift(line: usize, err: GraphError) -> ParseGraphError {
    match err {
        GraphError::Loop(node) => ParseGraphError::Loop { line, node },
        GraphError::DuplicateLabel(label) => ParseGraphError::DuplicateLabel { line, label },
        GraphError::NodeAlreadyLabeled(node) => ParseGraphError::NodeAlreadyLabeled { line, node },
        GraphError::NodeOutOfRange { node, node_count } => ParseGraphError::NodeOutOfRange {
            line,
            node,
            node_count,
        },
        other => malformed(line, other.to_string()),
    }
}

fn numbers<T: FromStr>(line: usize, tokens: &[&str]) -> Result<Vec<T>, ParseGraphError> {
    tokens
        .iter()
        .map(|t| {
            t.parse()
                .map_err(|_| malformed(line, format!("expected a nonnegative integer, got {t:?}")))
        })
        .collect()
}

impl FromStr for LabeledMultigraph {
    type Err = ParseGraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(malformed(hline, "header must be \"n m\""));
        }
        let head: Vec<usize> = numbers(hline, &head)?;
        let (n, m) = (head[0], head[1]);
        let mut g = LabeledMultigraph::new(n)
            .map_err(|_| malformed(hline, "node count must be positive"))?;

        let mut last_line = hline;
        for _ in 0..m {
            let (line, body) = lines
                .next()
                .ok_or_else(|| malformed(last_line, format!("expected {m} edge lines")))?;
            last_line = line;
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if !(2..=3).contains(&tokens.len()) || tokens[0] == "label" {
                return Err(malformed(line, "edge line must be \"u v [mult]\""));
            }
            let nums: Vec<u64> = numbers(line, &tokens)?;
            let mult = nums.get(2).copied().unwrap_or(1);
            let mult =
                u32::try_from(mult).map_err(|_| malformed(line, "multiplicity too large"))?;
            if mult == 0 {
                return Err(malformed(line, "multiplicity must be positive"));
            }
            g.add_edge(nums[0] as NodeId, nums[1] as NodeId, mult)
                .map_err(|e| lift(line, e))?;
        }

        for (line, body) in lines {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != 3 || tokens[0] != "label" {
                return Err(malformed(line, "expected \"label <node> <label>\""));
            }
            let nums: Vec<u64> = numbers(line, &tokens[1..])?;
            g.set_label(nums[0] as NodeId, nums[1])
                .map_err(|e| lift(line, e))?;
        }
        Ok(g)
    }
}

impl fmt::Display for LabeledMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.node_count(), self.edge_entry_count())?;
        for ((u, v), m) in self.edges() {
            if m == 1 {
                writeln!(f, "{u} {v}")?;
            } else {
                writeln!(f, "{u} {v} {m}")?;
            }
        }
        for (node, label) in self.labels() {
            writeln!(f, "label {node} {label}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g: LabeledMultigraph = "3 3\n0 1\n1 2\n0 2".parse().unwrap();
        assert_eq!(g, LabeledMultigraph::complete(3));
        assert!(g.is_unlabeled());
    }

    #[test]
    fn parses_labeled_double_edge() {
        let g: LabeledMultigraph = "2 1\n0 1 2\nlabel 0 1\nlabel 1 2".parse().unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.label_of(0), Some(1));
        assert_eq!(g.label_of(1), Some(2));
    }

    #[test]
    fn distinct_errors() {
        let parse = |s: &str| s.parse::<LabeledMultigraph>().unwrap_err();
        assert_eq!(
            parse("2 1\n0 0"),
            ParseGraphError::Loop { line: 2, node: 0 }
        );
        assert_eq!(
            parse("2 1\n0 1\nlabel 0 1\nlabel 1 1"),
            ParseGraphError::DuplicateLabel { line: 4, label: 1 }
        );
        assert_eq!(
            parse("2 1\n0 5"),
            ParseGraphError::NodeOutOfRange {
                line: 2,
                node: 5,
                node_count: 2
            }
        );
        assert!(matches!(
            parse("2 1\n0 x"),
            ParseGraphError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse("2 2\n0 1"),
            ParseGraphError::Malformed { .. }
        ));
        assert!(matches!(
            parse("0 0"),
            ParseGraphError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            parse("2 1\n0 1 0"),
            ParseGraphError::Malformed { .. }
        ));
        assert!(matches!(
            parse("2 1\n0 1\nlabel 0"),
            ParseGraphError::Malformed { line: 3, .. }
        ));
        assert!(matches!(
            parse("2 1\n0 1\nlabel 0 1\nlabel 0 2"),
            ParseGraphError::NodeAlreadyLabeled { line: 4, node: 0 }
        ));
    }

    #[test]
    fn serializes_sorted() {
        let mut g = LabeledMultigraph::new(3).unwrap();
        g.add_edge(2, 1, 3).unwrap();
        g.add_edge(1, 0, 1).unwrap();
        g.set_label(2, 9).unwrap();
        assert_eq!(g.to_string(), "3 2\n0 1\n1 2 3\nlabel 2 9\n");
    }

    fn arb_graph() -> impl Strategy<Value = LabeledMultigraph> {
        (1usize..7)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::collection::vec((0..n, 0..n, 1u32..4), 0..10),
                    proptest::collection::vec((0..n, 0u64..20), 0..4),
                )
            })
            .prop_map(|(n, edges, labels)| {
                let mut g = LabeledMultigraph::new(n).unwrap();
                for (u, v, m) in edges {
                    let _ = g.add_edge(u, v, m);
                }
                for (node, l) in labels {
                    let _ = g.set_label(node, l);
                }
                g
            })
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(g in arb_graph()) {
            let back: LabeledMultigraph = g.to_string().parse().unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
