//! Small named graphs and graphons used by the test suites, the benches and
//! the examples in the README.

use crate::graph::LabeledMultigraph;
use crate::graphon::{bipartite, StepGraphon, ValueRange};
use crate::rational::{int, ratio, Rational};
use crate::reduce::twin_reduce;

fn r(p: i64, q: i64) -> Rational {
    ratio(p, q)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> LabeledMultigraph {
    LabeledMultigraph::from_edges(n, edges).expect("corpus graphs are valid")
}

/// Simple graphs on at most six nodes, some disconnected.
pub fn graphs() -> Vec<(&'static str, LabeledMultigraph)> {
    vec![
        ("k1", LabeledMultigraph::complete(1)),
        ("k2", LabeledMultigraph::complete(2)),
        ("empty3", LabeledMultigraph::new(3).expect("nonempty")),
        ("p3", LabeledMultigraph::path(3)),
        ("k3", LabeledMultigraph::complete(3)),
        ("p4", LabeledMultigraph::path(4)),
        ("c4", LabeledMultigraph::cycle(4)),
        ("star4", graph(4, &[(0, 1), (0, 2), (0, 3)])),
        ("paw", graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("k4", LabeledMultigraph::complete(4)),
        ("two_k2", graph(4, &[(0, 1), (2, 3)])),
        ("c5", LabeledMultigraph::cycle(5)),
        ("bull", graph(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])),
        (
            "k23",
            graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        ),
        ("k3_plus_k2", graph(5, &[(0, 1), (1, 2), (0, 2), (3, 4)])),
        ("c6", LabeledMultigraph::cycle(6)),
        (
            "prism",
            graph(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
        ),
        ("k6", LabeledMultigraph::complete(6)),
    ]
}

/// Three blocks with distinct weights and no twins.
pub fn asymmetric3() -> StepGraphon {
    StepGraphon::new(
        vec![r(1, 2), r(1, 3), r(1, 6)],
        vec![
            vec![r(1, 2), r(1, 3), int(0)],
            vec![r(1, 3), int(1), r(2, 3)],
            vec![int(0), r(2, 3), r(1, 4)],
        ],
    )
    .expect("valid graphon")
}

/// Blocks 0 and 1 are twins.
pub fn with_twins() -> StepGraphon {
    StepGraphon::new(
        vec![r(1, 4), r(1, 4), r(1, 2)],
        vec![
            vec![r(1, 3), r(1, 3), int(1)],
            vec![r(1, 3), r(1, 3), int(1)],
            vec![int(1), int(1), int(0)],
        ],
    )
    .expect("valid graphon")
}

/// The middle block has weight zero and arbitrary values.
pub fn with_null_block() -> StepGraphon {
    StepGraphon::new(
        vec![r(1, 2), int(0), r(1, 2)],
        vec![
            vec![r(1, 5), int(1), r(3, 5)],
            vec![int(1), int(0), int(1)],
            vec![r(3, 5), int(1), int(1)],
        ],
    )
    .expect("valid graphon")
}

/// Values in `[-1, 1]`.
pub fn signed() -> StepGraphon {
    StepGraphon::with_range(
        vec![r(1, 2), r(1, 2)],
        vec![vec![int(1), int(-1)], vec![int(-1), r(1, 2)]],
        ValueRange::new(int(-1), int(1)).expect("lo < hi"),
    )
    .expect("valid graphon")
}

/// Step graphons with at most six blocks.
pub fn graphons() -> Vec<(&'static str, StepGraphon)> {
    let half = StepGraphon::constant(r(1, 2)).expect("valid");
    vec![
        ("bipartite", bipartite()),
        ("half", half),
        ("one", StepGraphon::constant(int(1)).expect("valid")),
        ("asymmetric3", asymmetric3()),
        ("twins", with_twins()),
        ("null_block", with_null_block()),
        ("signed", signed()),
        (
            "c5",
            StepGraphon::from_graph(&LabeledMultigraph::cycle(5)).expect("simple"),
        ),
        (
            "p3_blowup2",
            StepGraphon::from_graph(&LabeledMultigraph::path(3))
                .expect("simple")
                .blowup(2),
        ),
    ]
}

/// Pairs that are weakly isomorphic.
pub fn equivalent_pairs() -> Vec<(&'static str, StepGraphon, StepGraphon)> {
    let b = bipartite();
    let a = asymmetric3();
    vec![
        ("bipartite/blowup2", b.clone(), b.blowup(2)),
        ("blowup2/blowup3", b.blowup(2), b.blowup(3)),
        (
            "bipartite/c4",
            b.clone(),
            StepGraphon::from_graph(&LabeledMultigraph::cycle(4)).expect("simple"),
        ),
        ("twins/reduced", with_twins(), twin_reduce(&with_twins())),
        (
            "null_block/reduced",
            with_null_block(),
            twin_reduce(&with_null_block()),
        ),
        ("asymmetric3/permuted", a.clone(), a.permute(&[2, 0, 1])),
        ("signed/blowup2", signed(), signed().blowup(2)),
    ]
}

/// Pairs that are not weakly isomorphic.
pub fn inequivalent_pairs() -> Vec<(&'static str, StepGraphon, StepGraphon)> {
    let b = bipartite();
    let half = StepGraphon::constant(r(1, 2)).expect("valid");
    let a = asymmetric3();
    let flat = StepGraphon::constant(a.edge_density()).expect("valid");
    vec![
        ("bipartite/half", b, half.clone()),
        ("asymmetric3/flat", a, flat),
        ("twins/half", with_twins(), half),
        (
            "k3/c5",
            StepGraphon::from_graph(&LabeledMultigraph::complete(3)).expect("simple"),
            StepGraphon::from_graph(&LabeledMultigraph::cycle(5)).expect("simple"),
        ),
    ]
}
