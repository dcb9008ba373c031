use num_traits::{One, Zero};
use proptest::prelude::*;

use graphlim::corpus;
use graphlim::density::{density_exact, density_graph, density_mc, DensityEngine};
use graphlim::graph::{enumerate_multigraphs, enumerate_simple_graphs, LabeledMultigraph};
use graphlim::graphon::{bipartite, BlackBoxKernel, StepGraphon};
use graphlim::par::Execution;
use graphlim::rational::{int, pow, ratio, to_f64, Rational};

prop_compose! {
    fn step_graphon(max_blocks: usize)
        (b in 1..=max_blocks)
        (raw in proptest::collection::vec(0i64..4, b),
         cells in proptest::collection::vec(0usize..6, b * b),
         b in Just(b))
        -> StepGraphon
    {
        let raw = if raw.iter().all(|&w| w == 0) { vec![1; b] } else { raw };
        let total: i64 = raw.iter().sum();
        let palette = [int(0), ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(5, 6), int(1)];
        let mut values = vec![vec![int(0); b]; b];
        for i in 0..b {
            for j in i..b {
                values[i][j] = palette[cells[i * b + j]].clone();
                values[j][i] = palette[cells[i * b + j]].clone();
            }
        }
        StepGraphon::new(raw.iter().map(|&w| ratio(w, total)).collect(), values).unwrap()
    }
}

fn small_simple_graphs() -> Vec<LabeledMultigraph> {
    let mut out = vec![LabeledMultigraph::complete(1)];
    out.extend(enumerate_simple_graphs(4).unwrap());
    out.push(LabeledMultigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    out.push(LabeledMultigraph::new(3).unwrap());
    out
}

/// Spanning subgraph of `f` keeping the edges selected by `mask`.
fn spanning(f: &LabeledMultigraph, mask: u32) -> LabeledMultigraph {
    let edges: Vec<(usize, usize)> = f
        .edges()
        .map(|(p, _)| p)
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    LabeledMultigraph::from_edges(f.node_count(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn affine_expansion(h in step_graphon(3), a in 1i64..4, b in 0i64..3, pick in 0usize..100) {
        let graphs: Vec<LabeledMultigraph> = small_simple_graphs()
            .into_iter()
            .filter(|f| f.edge_entry_count() <= 4)
            .collect();
        let f = &graphs[pick % graphs.len()];
        let (a, b) = (ratio(a, 4), ratio(b, 5));
        let scaled = h.affine_rescale(&a, &b).unwrap();
        let lhs = density_exact(f, &scaled).unwrap();
        let m = f.edge_entry_count() as u32;
        let mut rhs = Rational::zero();
        for mask in 0u32..(1 << m) {
            let kept = mask.count_ones();
            rhs += pow(&a, kept) * pow(&b, m - kept) * density_exact(&spanning(f, mask), &h).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluate_is_constant_on_rectangles(h in step_graphon(4), u in 0.0f64..1.0, v in 0.0f64..1.0) {
        let x = h.block_of(u).unwrap();
        let y = h.block_of(v).unwrap();
        prop_assert!(h.weight(x) > &Rational::zero() && h.weight(y) > &Rational::zero());
        prop_assert_eq!(&h.evaluate(u, v).unwrap(), h.value(x, y));
        let kernel = BlackBoxKernel::from_step(&h);
        prop_assert_eq!(kernel.eval(u, v), to_f64(h.value(x, y)));
    }

    #[test]
    fn densities_lie_in_unit_interval(h in step_graphon(4), pick in 0usize..100) {
        let graphs = small_simple_graphs();
        let t = density_exact(&graphs[pick % graphs.len()], &h).unwrap();
        prop_assert!(t >= Rational::zero() && t <= Rational::one());
    }

    #[test]
    fn strategies_agree(h in step_graphon(4), pick in 0usize..100) {
        let graphs = small_simple_graphs();
        let f = &graphs[pick % graphs.len()];
        let seq = DensityEngine::sequential();
        let par = DensityEngine::new(Default::default(), Execution::Parallel);
        prop_assert_eq!(seq.density_exact(f, &h).unwrap(), par.density_exact(f, &h).unwrap());
    }
}

#[test]
fn graph_density_matches_graphon_of_graph() {
    for (name, g) in corpus::graphs() {
        let h = StepGraphon::from_graph(&g).unwrap();
        for f in small_simple_graphs() {
            assert_eq!(
                density_graph(&f, &g).unwrap(),
                density_exact(&f, &h).unwrap(),
                "{name} {f:?}"
            );
        }
    }
}

#[test]
fn monte_carlo_converges_to_exact() {
    let kernel_cases = [
        ("asymmetric3", corpus::asymmetric3()),
        ("twins", corpus::with_twins()),
        ("null_block", corpus::with_null_block()),
    ];
    for (name, h) in kernel_cases {
        let kernel = BlackBoxKernel::from_step(&h);
        for f in [LabeledMultigraph::complete(3), LabeledMultigraph::path(4)] {
            let exact = to_f64(&density_exact(&f, &h).unwrap());
            let est = density_mc(&f, &kernel, 200_000, 17).unwrap();
            assert!(
                (est.mean - exact).abs() <= 5.0 * est.stderr,
                "{name} {f:?}: {est} vs {exact}"
            );
        }
    }
}

#[test]
fn monte_carlo_is_unbiased_over_seeds() {
    let kernel = BlackBoxKernel::from_step(&bipartite());
    let c4 = LabeledMultigraph::cycle(4);
    let estimates: Vec<_> = (0..200)
        .map(|s| density_mc(&c4, &kernel, 2_000, s).unwrap())
        .collect();
    let mean = estimates.iter().map(|e| e.mean).sum::<f64>() / 200.0;
    let pooled = estimates
        .iter()
        .map(|e| e.stderr * e.stderr)
        .sum::<f64>()
        .sqrt()
        / 200.0;
    assert!((mean - 0.125).abs() <= 4.0 * pooled, "{mean} ± {pooled}");
}

#[test]
fn monte_carlo_strategies_agree() {
    let kernel = BlackBoxKernel::from_step(&corpus::asymmetric3());
    let f = LabeledMultigraph::cycle(4);
    let seq = DensityEngine::sequential()
        .density_mc(&f, &kernel, 30_000, 5)
        .unwrap();
    let par = DensityEngine::new(Default::default(), Execution::Parallel)
        .density_mc(&f, &kernel, 30_000, 5)
        .unwrap();
    assert_eq!(seq, par);
}

#[test]
fn blowups_agree_on_small_multigraphs() {
    let multigraphs = enumerate_multigraphs(4).unwrap();
    for (name, h) in corpus::graphons() {
        for k in [2, 3] {
            let hk = h.blowup(k);
            for f in &multigraphs {
                assert_eq!(
                    density_exact(f, &h).unwrap(),
                    density_exact(f, &hk).unwrap(),
                    "{name} k={k} {f:?}"
                );
            }
        }
    }
}
