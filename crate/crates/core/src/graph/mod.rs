//! Finite multigraphs with optional node labels and their gluing algebra.
//!
//! A [`LabeledMultigraph`] stores one aggregated multiplicity per unordered
//! node pair. Labels are distinct nonnegative integers attached to some of the
//! nodes; two partially labeled graphs are multiplied by gluing nodes that
//! carry the same label.

mod canon;
mod enumerate;
mod io;

use std::collections::BTreeMap;

use thiserror::Error;

pub use canon::CanonicalForm;
pub use enumerate::{
    enumerate_multigraphs, enumerate_simple_graphs, enumerate_simple_graphs_with_limit,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use io::ParseGraphError;

pub type NodeId = usize;
pub type Label = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one node")]
    Empty,
    #[error("node {node} out of range for a graph on {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },
    #[error("loop at node {0}")]
    Loop(NodeId),
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("label {0} used twice")]
    DuplicateLabel(Label),
    #[error("node {0} already carries a label")]
    NodeAlreadyLabeled(NodeId),
    #[error("no edge between {0} and {1}")]
    MissingPair(NodeId, NodeId),
    #[error("star needs at least one positive exponent")]
    AllExponentsZero,
    #[error("enumeration of graphs on {requested} nodes exceeds the limit of {limit}")]
    EnumerationLimit { requested: usize, limit: usize },
}

/// Finite loopless multigraph with a partial injective labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledMultigraph {
    node_count: usize,
    edges: BTreeMap<(NodeId, NodeId), u32>,
    labels: BTreeMap<NodeId, Label>,
}

fn ordered(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl LabeledMultigraph {
    /// Edgeless, unlabeled graph on `node_count` nodes.
    pub fn new(node_count: usize) -> Result<Self, GraphError> {
        if node_count == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Self {
            node_count,
            edges: BTreeMap::new(),
            labels: BTreeMap::new(),
        })
    }

    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        let mut g = Self::new(node_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n).expect("complete graph needs a node");
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v), 1);
            }
        }
        g
    }

    /// Path on `n` nodes, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n).expect("path needs a node");
        for u in 1..n {
            g.edges.insert((u - 1, u), 1);
        }
        g
    }

    /// Cycle `C_n`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three nodes");
        let mut g = Self::path(n);
        g.edges.insert((0, n - 1), 1);
        g
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Aggregated edge entries `((u, v), multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = ((NodeId, NodeId), u32)> + '_ {
        self.edges.iter().map(|(&pair, &m)| (pair, m))
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_entry_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.edges.values().map(|&m| u64::from(m)).sum()
    }

    pub fn multiplicity(&self, u: NodeId, v: NodeId) -> u32 {
        self.edges.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> &BTreeMap<NodeId, Label> {
        &self.labels
    }

    pub fn label_of(&self, node: NodeId) -> Option<Label> {
        self.labels.get(&node).copied()
    }

    pub fn node_with_label(&self, label: Label) -> Option<NodeId> {
        self.labels
            .iter()
            .find_map(|(&node, &l)| (l == label).then_some(node))
    }

    pub fn label_set(&self) -> Vec<Label> {
        let mut ls: Vec<Label> = self.labels.values().copied().collect();
        ls.sort_unstable();
        ls
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    pub fn is_unlabeled(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn degree(&self, node: NodeId) -> u64 {
        self.edges
            .iter()
            .filter(|((u, v), _)| *u == node || *v == node)
            .map(|(_, &m)| u64::from(m))
            .sum()
    }

    /// Adds `multiplicity` parallel edges between `u` and `v`.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, multiplicity: u32) -> Result<(), GraphError> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if multiplicity == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        *self.edges.entry(ordered(u, v)).or_insert(0) += multiplicity;
        Ok(())
    }

    pub fn set_label(&mut self, node: NodeId, label: Label) -> Result<(), GraphError> {
        self.check_node(node)?;
        if self.labels.contains_key(&node) {
            return Err(GraphError::NodeAlreadyLabeled(node));
        }
        if self.labels.values().any(|&l| l == label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        self.labels.insert(node, label);
        Ok(())
    }

    /// Builder form of [`set_label`](Self::set_label).
    pub fn labeled(mut self, pairs: &[(NodeId, Label)]) -> Result<Self, GraphError> {
        for &(node, label) in pairs {
            self.set_label(node, label)?;
        }
        Ok(self)
    }

    /// Same graph with every label removed.
    pub fn unlabeled(&self) -> Self {
        Self {
            node_count: self.node_count,
            edges: self.edges.clone(),
            labels: BTreeMap::new(),
        }
    }

    fn check_node(&self, node: NodeId) -> Result<(), GraphError> {
        if node >= self.node_count {
            Err(GraphError::NodeOutOfRange {
                node,
                node_count: self.node_count,
            })
        } else {
            Ok(())
        }
    }

    /// Gluing product: nodes carrying the same label are identified, all
    /// edges are kept (parallel edges created by the gluing add up).
    pub fn product(&self, other: &Self) -> Self {
        let mut out = self.clone();
        let mut map = vec![0; other.node_count];
        for (node, slot) in map.iter_mut().enumerate() {
            *slot = match other.label_of(node).and_then(|l| self.node_with_label(l)) {
                Some(shared) => shared,
                None => {
                    out.node_count += 1;
                    let fresh = out.node_count - 1;
                    if let Some(l) = other.label_of(node) {
                        out.labels.insert(fresh, l);
                    }
                    fresh
                }
            };
        }
        for ((u, v), m) in other.edges() {
            *out.edges.entry(ordered(map[u], map[v])).or_insert(0) += m;
        }
        out
    }

    /// Replaces one parallel copy of the edge `{u, v}` by a path through
    /// `new_nodes` fresh unlabeled nodes.
    pub fn subdivide_edge(
        &self,
        u: NodeId,
        v: NodeId,
        new_nodes: usize,
    ) -> Result<Self, GraphError> {
        let key = ordered(u, v);
        if self.multiplicity(u, v) == 0 {
            return Err(GraphError::MissingPair(key.0, key.1));
        }
        let mut out = self.clone();
        if new_nodes == 0 {
            return Ok(out);
        }
        match out.edges.get_mut(&key) {
            Some(m) if *m > 1 => *m -= 1,
            _ => {
                out.edges.remove(&key);
            }
        }
        let first = out.node_count;
        out.node_count += new_nodes;
        let mut prev = u;
        for fresh in first..first + new_nodes {
            out.edges.insert(ordered(prev, fresh), 1);
            prev = fresh;
        }
        *out.edges.entry(ordered(prev, v)).or_insert(0) += 1;
        Ok(out)
    }

    /// Every edge replaced by `q` parallel copies.
    pub fn edge_power(&self, q: u32) -> Result<Self, GraphError> {
        if q == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        let mut out = self.clone();
        for m in out.edges.values_mut() {
            *m *= q;
        }
        Ok(out)
    }

    /// Keeps every node and the given edge multiplicities, indexed like
    /// [`edges`](Self::edges); zero entries drop the pair.
    pub fn with_multiplicities(&self, multiplicities: &[u32]) -> Self {
        assert_eq!(multiplicities.len(), self.edges.len());
        let edges = self
            .edges
            .keys()
            .zip(multiplicities)
            .filter(|(_, &m)| m > 0)
            .map(|(&pair, &m)| (pair, m))
            .collect();
        Self {
            node_count: self.node_count,
            edges,
            labels: self.labels.clone(),
        }
    }

    /// Whether every node is reachable from node 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in self.edges.keys() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    /// Isomorphism preserving labels and multiplicities.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.node_count == other.node_count
            && self.edges.len() == other.edges.len()
            && self.label_set() == other.label_set()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Star with an unlabeled center and leaves labeled `1..=m`; the edge to
/// leaf `i` has multiplicity `exponents[i - 1]` (zero leaves stay isolated).
pub fn star_multigraph(exponents: &[u32]) -> Result<LabeledMultigraph, GraphError> {
    if exponents.iter().all(|&k| k == 0) {
        return Err(GraphError::AllExponentsZero);
    }
    let mut g = LabeledMultigraph::new(exponents.len() + 1)?;
    for (i, &k) in exponents.iter().enumerate() {
        let leaf = i + 1;
        g.set_label(leaf, leaf as Label)?;
        if k > 0 {
            g.add_edge(0, leaf, k)?;
        }
    }
    Ok(g)
}
