//! Canonical forms by colour refinement plus backtracking over the cells.
//!
//! Nodes are first coloured by (label, weighted degree) and refined until the
//! colouring is stable. The canonical code is the lexicographically smallest
//! adjacency code over all orderings that list colour classes in order, which
//! makes it an isomorphism invariant. Fine for the small patterns used here.

use std::cmp::Ordering;

use super::LabeledMultigraph;

/// Complete isomorphism invariant of a [`LabeledMultigraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u64>);

fn multiplicity_matrix(g: &LabeledMultigraph) -> Vec<Vec<u64>> {
    let n = g.node_count();
    let mut m = vec![vec![0u64; n]; n];
    for ((u, v), k) in g.edges() {
        m[u][v] = u64::from(k);
        m[v][u] = u64::from(k);
    }
    m
}

fn recolor<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

fn stable_coloring(g: &LabeledMultigraph, adj: &[Vec<u64>]) -> Vec<usize> {
    let n = g.node_count();
    let initial: Vec<(u64, u64)> = (0..n)
        .map(|v| {
            let label = g.label_of(v).map_or(0, |l| l + 1);
            (label, adj[v].iter().sum())
        })
        .collect();
    let mut colors = recolor(&initial);
    let mut count = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let keys: Vec<(usize, Vec<(usize, u64)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(usize, u64)> = (0..n)
                    .filter(|&w| adj[v][w] > 0)
                    .map(|w| (colors[w], adj[v][w]))
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let next = recolor(&keys);
        let next_count = next.iter().max().map_or(0, |&c| c + 1);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

struct Search<'a> {
    adj: &'a [Vec<u64>],
    /// Vertices allowed at each position, fixed by the colour order.
    slots: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, tight: bool) {
        if pos == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for idx in 0..self.slots[pos].len() {
            let v = self.slots[pos][idx];
            if self.used[v] {
                continue;
            }
            let start = self.code.len();
            for i in 0..pos {
                self.code.push(self.adj[self.order[i]][v]);
            }
            let mut still_tight = tight;
            if tight {
                if let Some(best) = &self.best {
                    match self.code[start..].cmp(&best[start..self.code.len()]) {
                        Ordering::Greater => {
                            self.code.truncate(start);
                            continue;
                        }
                        Ordering::Less => still_tight = false,
                        Ordering::Equal => {}
                    }
                } else {
                    still_tight = false;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, still_tight);
            self.order.pop();
            self.used[v] = false;
            self.code.truncate(start);
        }
    }
}

pub(super) fn canonical_form(g: &LabeledMultigraph) -> CanonicalForm {
    let n = g.node_count();
    let adj = multiplicity_matrix(g);
    let colors = stable_coloring(g, &adj);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| colors[v]);
    let slots: Vec<Vec<usize>> = by_color
        .iter()
        .map(|&v| (0..n).filter(|&w| colors[w] == colors[v]).collect())
        .collect();

    // header: node count and the label at each position (colour order fixes it)
    let mut header = vec![n as u64];
    header.extend(by_color.iter().map(|&v| g.label_of(v).map_or(0, |l| l + 1)));

    let mut search = Search {
        adj: &adj,
        slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: header,
        best: None,
    };
    search.run(0, true);
    CanonicalForm(search.best.expect("at least one ordering"))
}
