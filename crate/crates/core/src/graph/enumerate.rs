use std::collections::BTreeMap;

use super::{CanonicalForm, GraphError, LabeledMultigraph};

/// Largest pattern size [`enumerate_simple_graphs`] accepts by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

/// One representative per isomorphism class of connected simple unlabeled
/// graphs on `2..=max_nodes` nodes, ordered by (nodes, edges, canonical form).
pub fn enumerate_simple_graphs(max_nodes: usize) -> Result<Vec<LabeledMultigraph>, GraphError> {
    enumerate_simple_graphs_with_limit(max_nodes, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_simple_graphs_with_limit(
    max_nodes: usize,
    limit: usize,
) -> Result<Vec<LabeledMultigraph>, GraphError> {
    if max_nodes > limit {
        return Err(GraphError::EnumerationLimit {
            requested: max_nodes,
            limit,
        });
    }
    let mut out = Vec::new();
    if max_nodes < 2 {
        return Ok(out);
    }
    let mut level = vec![LabeledMultigraph::complete(2)];
    out.extend(level.iter().cloned());
    for n in 3..=max_nodes {
        level = extend_level(&level, n);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// Every connected graph on `n` nodes has a node whose removal leaves it
/// connected, so attaching a new node to every nonempty subset of each
/// connected `(n-1)`-node graph reaches every class.
fn extend_level(previous: &[LabeledMultigraph], n: usize) -> Vec<LabeledMultigraph> {
    let mut seen: BTreeMap<(usize, CanonicalForm), LabeledMultigraph> = BTreeMap::new();
    for base in previous {
        for mask in 1u32..(1 << (n - 1)) {
            let mut g = LabeledMultigraph::new(n).expect("n >= 3");
            for ((u, v), _) in base.edges() {
                g.add_edge(u, v, 1).expect("valid edge");
            }
            for u in 0..n - 1 {
                if mask & (1 << u) != 0 {
                    g.add_edge(u, n - 1, 1).expect("valid edge");
                }
            }
            let key = (g.edge_entry_count(), g.canonical_form());
            seen.entry(key).or_insert(g);
        }
    }
    seen.into_values().collect()
}

/// Connected unlabeled multigraphs with at least one edge and total edge
/// multiplicity at most `max_total`, one per isomorphism class, ordered by
/// (total multiplicity, nodes, canonical form).
pub fn enumerate_multigraphs(max_total: u32) -> Result<Vec<LabeledMultigraph>, GraphError> {
    let max_nodes = (max_total as usize + 1).min(DEFAULT_ENUMERATION_LIMIT + 1);
    if max_nodes > DEFAULT_ENUMERATION_LIMIT {
        return Err(GraphError::EnumerationLimit {
            requested: max_nodes,
            limit: DEFAULT_ENUMERATION_LIMIT,
        });
    }
    let mut seen: BTreeMap<(u64, usize, CanonicalForm), LabeledMultigraph> = BTreeMap::new();
    for skeleton in enumerate_simple_graphs(max_nodes)? {
        let e = skeleton.edge_entry_count();
        if e as u32 > max_total {
            continue;
        }
        let mut mults = vec![1u32; e];
        loop {
            let g = skeleton.with_multiplicities(&mults);
            let key = (g.total_multiplicity(), g.node_count(), g.canonical_form());
            seen.entry(key).or_insert(g);
            if !next_composition(&mut mults, max_total) {
                break;
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Advances `mults` (entries >= 1) to the next vector with sum <= `max_total`.
fn next_composition(mults: &mut [u32], max_total: u32) -> bool {
    let mut sum: u32 = mults.iter().sum();
    for m in mults.iter_mut() {
        if sum < max_total {
            *m += 1;
            return true;
        }
        sum -= *m - 1;
        *m = 1;
    }
    false
}
