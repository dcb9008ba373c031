//! Weak isomorphism of step graphons.
//!
//! Twin-free step graphons are weakly isomorphic exactly when they are
//! isomorphic, so the decision reduces both sides and looks for a block
//! bijection preserving weights and values.

use std::fmt;

use super::{twin_reduction, ReduceError, Reduction};
use crate::density::DensityEngine;
use crate::graph::{enumerate_simple_graphs, LabeledMultigraph};
use crate::graphon::StepGraphon;
use crate::par::Execution;
use crate::rational::{format_rational, Rational};

/// Why two graphons are not weakly isomorphic, cheapest check first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    BlockCount(usize, usize),
    WeightMultiset,
    ValueMultiset,
    SearchExhausted,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::BlockCount(a, b) => write!(f, "reduced block counts differ: {a} vs {b}"),
            Witness::WeightMultiset => f.write_str("reduced weight multisets differ"),
            Witness::ValueMultiset => f.write_str("reduced value multisets differ"),
            Witness::SearchExhausted => {
                f.write_str("no weight- and value-preserving block bijection")
            }
        }
    }
}

/// Reduced forms and a bijection between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub reduced1: Reduction,
    pub reduced2: Reduction,
    /// `bijection[i]` is the block of the second reduced form matched to
    /// block `i` of the first.
    pub bijection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakIsoVerdict {
    Isomorphic(Matching),
    NotIsomorphic(Witness),
}

impl WeakIsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, WeakIsoVerdict::Isomorphic(_))
    }
}

impl fmt::Display for WeakIsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeakIsoVerdict::Isomorphic(m) => {
                writeln!(f, "Isomorphic")?;
                let u = &m.reduced1.graphon;
                writeln!(f, "reduced blocks: {}", u.num_blocks())?;
                for (i, &j) in m.bijection.iter().enumerate() {
                    writeln!(f, "{i} -> {j} weight {}", format_rational(u.weight(i)))?;
                }
                Ok(())
            }
            WeakIsoVerdict::NotIsomorphic(w) => {
                writeln!(f, "NotIsomorphic")?;
                writeln!(f, "witness: {w}")
            }
        }
    }
}

/// Weighted row profile used to order and prune the bijection search.
type Signature<'a> = (&'a Rational, Vec<(&'a Rational, &'a Rational)>);

fn signature(h: &StepGraphon, b: usize) -> Signature<'_> {
    let mut row: Vec<(&Rational, &Rational)> = (0..h.num_blocks())
        .map(|c| (h.value(b, c), h.weight(c)))
        .collect();
    row.sort();
    (h.weight(b), row)
}

fn sorted<'a>(items: impl Iterator<Item = &'a Rational>) -> Vec<&'a Rational> {
    let mut v: Vec<&Rational> = items.collect();
    v.sort();
    v
}

struct Search<'a> {
    a: &'a StepGraphon,
    b: &'a StepGraphon,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for idx in 0..self.candidates[depth].len() {
            let j = self.candidates[depth][idx];
            if self.used[j] || self.a.value(i, i) != self.b.value(j, j) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&k| {
                let l = self.assigned[k].expect("earlier blocks assigned");
                self.a.value(i, k) == self.b.value(j, l)
            });
            if !consistent {
                continue;
            }
            self.assigned[i] = Some(j);
            self.used[j] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.assigned[i] = None;
            self.used[j] = false;
        }
        false
    }
}

/// Block bijection between two twin-free graphons preserving weights and
/// values, or the first invariant that rules one out.
fn match_reduced(a: &StepGraphon, b: &StepGraphon) -> Result<Vec<usize>, Witness> {
    let n = a.num_blocks();
    if n != b.num_blocks() {
        return Err(Witness::BlockCount(n, b.num_blocks()));
    }
    if sorted(a.weights().iter()) != sorted(b.weights().iter()) {
        return Err(Witness::WeightMultiset);
    }
    if sorted(a.values().iter().flatten()) != sorted(b.values().iter().flatten()) {
        return Err(Witness::ValueMultiset);
    }
    let sig_a: Vec<Signature> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<Signature> = (0..n).map(|j| signature(b, j)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| sig_a[x].cmp(&sig_a[y]).then(x.cmp(&y)));
    let candidates = order
        .iter()
        .map(|&i| (0..n).filter(|&j| sig_b[j] == sig_a[i]).collect())
        .collect();
    let mut search = Search {
        a,
        b,
        order,
        candidates,
        assigned: vec![None; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Ok(search
            .assigned
            .into_iter()
            .map(|j| j.expect("complete"))
            .collect())
    } else {
        Err(Witness::SearchExhausted)
    }
}

/// Decides weak isomorphism exactly.
pub fn weak_iso(h1: &StepGraphon, h2: &StepGraphon) -> WeakIsoVerdict {
    let reduced1 = twin_reduction(h1);
    let reduced2 = twin_reduction(h2);
    match match_reduced(&reduced1.graphon, &reduced2.graphon) {
        Ok(bijection) => WeakIsoVerdict::Isomorphic(Matching {
            reduced1,
            reduced2,
            bijection,
        }),
        Err(w) => WeakIsoVerdict::NotIsomorphic(w),
    }
}

/// First connected simple graph (in enumeration order) on at most
/// `max_nodes` nodes whose densities differ. `None` is inconclusive.
pub fn find_distinguishing_graph(
    h1: &StepGraphon,
    h2: &StepGraphon,
    max_nodes: usize,
) -> Result<Option<LabeledMultigraph>, ReduceError> {
    find_distinguishing_graph_with(h1, h2, max_nodes, Execution::default())
}

pub fn find_distinguishing_graph_with(
    h1: &StepGraphon,
    h2: &StepGraphon,
    max_nodes: usize,
    execution: Execution,
) -> Result<Option<LabeledMultigraph>, ReduceError> {
    let candidates = enumerate_simple_graphs(max_nodes)?;
    let engine = DensityEngine::sequential();
    // surface size errors before the search rather than treating them as "differs"
    if let Some(f) = candidates.last() {
        engine.density_exact(f, h1)?;
        engine.density_exact(f, h2)?;
    }
    let hit = execution.position_first(&candidates, |f| {
        engine.density_exact(f, h1).ok() != engine.density_exact(f, h2).ok()
    });
    Ok(hit.map(|i| candidates[i].clone()))
}

/// Common quotient of two weakly isomorphic graphons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonQuotient {
    /// Twin-free form of the first graphon.
    pub quotient: StepGraphon,
    /// Block of `quotient` for each block of the first graphon (`None` for
    /// zero-weight blocks).
    pub map1: Vec<Option<usize>>,
    pub map2: Vec<Option<usize>>,
}

pub fn common_quotient(h1: &StepGraphon, h2: &StepGraphon) -> Option<CommonQuotient> {
    let WeakIsoVerdict::Isomorphic(m) = weak_iso(h1, h2) else {
        return None;
    };
    let mut inverse = vec![0; m.bijection.len()];
    for (i, &j) in m.bijection.iter().enumerate() {
        inverse[j] = i;
    }
    let map2 = m
        .reduced2
        .block_map
        .iter()
        .map(|c| c.map(|c| inverse[c]))
        .collect();
    Some(CommonQuotient {
        quotient: m.reduced1.graphon,
        map1: m.reduced1.block_map,
        map2,
    })
}
